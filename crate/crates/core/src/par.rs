//! Optional data parallelism. With the `parallel` feature the `Parallel`
//! strategy runs on the rayon pool; without it every strategy is sequential.
//! Both strategies return results in input order.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
        items.into_iter().map(f).collect()
    }

    /// The first item (in input order) satisfying `pred`.
    pub fn find_first<T, F>(self, items: Vec<T>, pred: F) -> Option<T>
    where
        T: Send,
        F: Fn(&T) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Exec::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().find_first(|t| pred(t));
        }
        items.into_iter().find(|t| pred(t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = Exec::Sequential.map(items.clone(), |x| x * x % 97);
        let par = Exec::Parallel.map(items.clone(), |x| x * x % 97);
        assert_eq!(seq, par);
        assert_eq!(
            Exec::Sequential.find_first(items.clone(), |x| x % 37 == 36),
            Exec::Parallel.find_first(items, |x| x % 37 == 36)
        );
    }
}
