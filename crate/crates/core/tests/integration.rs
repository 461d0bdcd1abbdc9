use hamcay::cli::run;
use hamcay::constructor::{base_pattern, search_decomposition, SearchOptions};
use hamcay::verify::detect_mode;
use hamcay::{Decomposition, GklParams, Mode};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("hamcay").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Same colouring up to a translation and possibly swapping the two classes.
fn equivalent(a: &Decomposition, b: &Decomposition) -> bool {
    let p = num_integer::lcm(a.period(), b.period());
    let (a, b) = (a.with_period(p).unwrap(), b.with_period(p).unwrap());
    let k = a.params().k();
    (0..k).any(|dm| {
        (0..p).any(|dn| {
            let t = b.translate(dm, dn);
            t.same_coloring(&a) || t.swap_colors().same_coloring(&a)
        })
    })
}

#[test]
fn search_rediscovers_g22_rays() {
    let g = GklParams::new(2, 2).unwrap();
    let found = search_decomposition(g, 2, Mode::DoubleRays, SearchOptions::default())
        .unwrap()
        .expect("a period-2 solution exists");
    let fixture = base_pattern("G22_rays").unwrap();
    assert!(equivalent(&found, &fixture));
}

#[test]
fn emitted_json_is_accepted_everywhere() {
    let dir = tempfile::tempdir().unwrap();
    for (k, l, mode) in [("4", "2", "rays"), ("4", "0", "circles"), ("3", "-2", "mixed"), ("5", "5", "circles")] {
        let file = dir.path().join(format!("G{k}_{l}.json"));
        let f = file.to_str().unwrap();
        let (code, _, err) = call(&["decompose", "--k", k, "--l", l, "--mode", mode, "--json", f]);
        assert_eq!(code, 0, "{err}");
        let (code, _, err) = call(&["verify", f, "--mode", mode, "--oracle"]);
        assert_eq!(code, 0, "{err}");
        let d = Decomposition::from_json(&std::fs::read_to_string(&file).unwrap()).unwrap();
        let to = (2 * d.period()).to_string();
        for format in ["ascii", "svg", "tikz"] {
            assert_eq!(call(&["render", f, "--format", format, "--from", "0", "--to", &to]).0, 0);
        }
        assert_eq!(call(&["render", f, "--from", "0", "--to", "1"]).0, 4);
    }
}

#[test]
fn auto_mode_respects_parity() {
    for k in 2..=6 {
        for l in -6..=6 {
            let g = GklParams::new(k, l).unwrap();
            if !g.is_four_regular() {
                continue;
            }
            let (code, out, err) = call(&["decompose", "--k", &k.to_string(), "--l", &l.to_string()]);
            assert_eq!(code, 0, "{g}: {err}");
            let mode = detect_mode(&Decomposition::from_json(&out).unwrap()).unwrap();
            assert_eq!(mode == Mode::Mixed, !g.satisfies_parity(), "{g}");
        }
    }
}

#[test]
fn fixtures_verify_from_the_command_line() {
    let root = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/");
    let (code, _, err) = call(&["verify", &format!("{root}G21_mixed.json"), "--mode", "mixed"]);
    assert_eq!(code, 0, "{err}");
    let (code, _, _) = call(&["verify", &format!("{root}G21_mixed.json"), "--mode", "rays"]);
    assert_eq!(code, 3);
}
