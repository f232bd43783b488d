//! Runs independent jobs over a slice, in parallel when the `parallel`
//! feature is on and sequentially otherwise. Output order always matches
//! input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::algorithms::{bellman_solve, mda_solve, Algorithm, SolveError, SolveOptions, SolveResult};
use crate::instance::Instance;
use crate::space::WeightSpace;

pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Always sequential; the reference the parallel path is measured against.
pub fn map_sequential<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

pub fn solve<S: WeightSpace>(
    inst: &Instance<S>,
    algorithm: Algorithm,
    opts: &SolveOptions,
) -> Result<SolveResult<S::Weight>, SolveError> {
    match algorithm {
        Algorithm::Bellman => bellman_solve(inst, opts),
        Algorithm::Mda => mda_solve(inst, opts),
    }
}

pub fn solve_all<S: WeightSpace>(
    instances: &[Instance<S>],
    algorithm: Algorithm,
    opts: &SolveOptions,
) -> Vec<Result<SolveResult<S::Weight>, SolveError>> {
    map(instances, |inst| solve(inst, algorithm, opts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let xs: Vec<u64> = (0..1000).collect();
        assert_eq!(map(&xs, |x| x * 2), map_sequential(&xs, |x| x * 2));
    }
}
