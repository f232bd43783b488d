//! Which solver is guaranteed correct for which properties, as data.
//!
//! Each row lists the properties it requires and the ones that follow from
//! them, the guarantee it gives, and the results it rests on.

use crate::algorithms::{Algorithm, Variant};
use crate::instance::{Property, PropertySet};

use Property::{
    ArcIncreasing as A, CycleIncreasing as CWI, CycleNonDecreasing as CWND, HistoryFree as H, Independent as I,
    LeoMonotone as L, MuBounded as MU, SubpathOptimal as SO, WeaklyIndependent as WI, WeaklySubpathOptimal as WSO,
    WellPosed as WP,
};

/// What the returned set of paths is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Guarantee {
    /// One path per nondominated weight.
    Minimal,
    /// Every nondominated weight, possibly with several paths.
    Complete,
    /// Every efficient path.
    Maximal,
}

impl Guarantee {
    pub fn name(self) -> &'static str {
        match self {
            Guarantee::Minimal => "minimal",
            Guarantee::Complete => "complete",
            Guarantee::Maximal => "maximal",
        }
    }

    /// The problem variant this guarantee answers, if it answers one fully.
    pub fn variant(self) -> Option<Variant> {
        match self {
            Guarantee::Minimal => Some(Variant::Min),
            Guarantee::Complete => None,
            Guarantee::Maximal => Some(Variant::Max),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Row {
    pub number: usize,
    pub algorithm: Algorithm,
    pub guarantee: Guarantee,
    pub required: &'static [Property],
    pub implied: &'static [Property],
    pub grounds: &'static [&'static str],
}

impl Row {
    /// Solver mode that delivers the guarantee: tie-breaking merges and
    /// `⪯`-pruning for minimal sets, strict-only pruning otherwise.
    pub fn solver_variant(&self) -> Variant {
        match self.guarantee {
            Guarantee::Minimal => Variant::Min,
            Guarantee::Complete | Guarantee::Maximal => Variant::Max,
        }
    }

    pub fn required_set(&self) -> PropertySet {
        PropertySet::of(self.required)
    }

    pub fn implied_set(&self) -> PropertySet {
        PropertySet::of(self.implied)
    }
}

const BM_WI: &str = "bellman-min-weak-independence";
const BM_WSO: &str = "bellman-min-weak-subpath-optimality";
const BMAX: &str = "bellman-max-subpath-optimality";
const MDA_MIN: &str = "mda-min-weak-subpath-optimality";
const MDA_MAX: &str = "mda-max-subpath-optimality";
const CWI_WSO: &str = "cycle-increasing-weak-independence-gives-weak-subpath-optimality";
const MU_WSO: &str = "bounded-weak-independence-gives-weak-subpath-optimality";
const CWND_WSO: &str = "cycle-non-decreasing-weak-independence-gives-weak-subpath-optimality";
const I_SO: &str = "independence-gives-subpath-optimality";

macro_rules! row {
    ($n:expr, $alg:ident, $g:ident, [$($r:expr),*], [$($i:expr),*], [$($c:expr),*]) => {
        Row {
            number: $n,
            algorithm: Algorithm::$alg,
            guarantee: Guarantee::$g,
            required: &[$($r),*],
            implied: &[$($i),*],
            grounds: &[$($c),*],
        }
    };
}

pub const ROWS: [Row; 24] = [
    row!(1, Bellman, Minimal, [WP, H, WI], [], [BM_WI]),
    row!(2, Bellman, Minimal, [WP, H, WSO], [], [BM_WSO]),
    row!(3, Bellman, Minimal, [H, WSO, MU], [WP], [BM_WSO]),
    row!(4, Bellman, Minimal, [H, CWI, WI], [WP, CWND, WSO], [CWI_WSO, BM_WSO]),
    row!(5, Bellman, Minimal, [H, A, WI], [WP, CWND, CWI, WSO], [CWI_WSO, BM_WSO]),
    row!(6, Bellman, Minimal, [H, WI, MU], [WP, WSO], [MU_WSO, BM_WSO]),
    row!(7, Bellman, Complete, [WSO, MU], [WP], [BMAX]),
    row!(8, Bellman, Maximal, [SO, MU], [WP, WSO], [BMAX]),
    row!(9, Bellman, Maximal, [I, MU], [WP, WSO, SO], [I_SO, BMAX]),
    row!(10, Mda, Minimal, [WP, H, WSO, L], [], [MDA_MIN]),
    row!(11, Mda, Minimal, [WP, H, A, WSO], [CWND, CWI, L], [MDA_MIN]),
    row!(12, Mda, Minimal, [H, WSO, MU, L], [WP], [MDA_MIN]),
    row!(13, Mda, Minimal, [H, A, WSO, MU], [WP, CWND, CWI, L], [MDA_MIN]),
    row!(14, Mda, Minimal, [H, CWI, WI, L], [WP, CWND, WSO], [CWI_WSO, MDA_MIN]),
    row!(
        15,
        Mda,
        Minimal,
        [H, A, WI],
        [WP, CWND, CWI, WSO, L],
        [CWI_WSO, MDA_MIN]
    ),
    row!(16, Mda, Minimal, [H, WI, MU, L], [WP, WSO], [MU_WSO, MDA_MIN]),
    row!(17, Mda, Minimal, [WP, H, CWND, WI, L], [WSO], [CWND_WSO, MDA_MIN]),
    row!(18, Mda, Complete, [WSO, MU, L], [WP], [MDA_MAX]),
    row!(19, Mda, Complete, [A, WSO, MU], [WP, CWND, CWI, L], [MDA_MAX]),
    row!(20, Mda, Complete, [H, WI, MU], [WP, WSO, L], [MU_WSO, MDA_MAX]),
    row!(21, Mda, Maximal, [SO, MU, L], [WP, WSO], [MDA_MAX]),
    row!(22, Mda, Maximal, [I, MU, L], [WP, WSO, SO], [I_SO, MDA_MAX]),
    row!(23, Mda, Maximal, [A, SO, MU], [WP, CWND, CWI, WSO, L], [MDA_MAX]),
    row!(
        24,
        Mda,
        Maximal,
        [A, I, MU],
        [WP, CWND, CWI, WSO, SO, L],
        [I_SO, MDA_MAX]
    ),
];

/// Adds everything the declared properties imply by definition.
pub fn close(props: PropertySet) -> PropertySet {
    const RULES: [(Property, Property); 4] = [(I, WI), (A, CWI), (CWI, CWND), (SO, WSO)];
    let mut out = props;
    loop {
        let before = out;
        for (from, to) in RULES {
            if out.contains(from) {
                out.insert(to);
            }
        }
        if out == before {
            return out;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Recommendation {
    pub row: &'static Row,
    pub satisfied: bool,
    /// Required properties absent from the closed set.
    pub missing: PropertySet,
}

/// Every row, evaluated against the closure of `props`.
pub fn evaluate(props: PropertySet) -> Vec<Recommendation> {
    let closed = close(props);
    ROWS.iter()
        .map(|row| {
            let missing = row.required_set().difference(closed);
            Recommendation {
                row,
                satisfied: missing.is_empty(),
                missing,
            }
        })
        .collect()
}

/// Rows whose requirements hold and whose guarantee answers `variant`.
/// Empty means no correctness guarantee.
pub fn recommend_algorithm(props: PropertySet, variant: Variant) -> Vec<&'static Row> {
    evaluate(props)
        .into_iter()
        .filter(|r| r.satisfied && r.row.guarantee.variant() == Some(variant))
        .map(|r| r.row)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_rules() {
        let c = close(PropertySet::of(&[I]));
        assert!(c.contains(WI));
        let c = close(PropertySet::of(&[A]));
        assert!(c.contains(CWI) && c.contains(CWND));
        let c = close(PropertySet::of(&[SO]));
        assert!(c.contains(WSO));
        assert_eq!(close(PropertySet::empty()), PropertySet::empty());
    }

    #[test]
    fn rows_are_numbered_in_order() {
        for (i, row) in ROWS.iter().enumerate() {
            assert_eq!(row.number, i + 1);
            assert!(row.required_set().difference(row.implied_set()) == row.required_set());
        }
    }

    #[test]
    fn weak_independence_recommends_bellman_only() {
        let rows = recommend_algorithm(PropertySet::of(&[WP, H, WI]), Variant::Min);
        assert_eq!(rows.iter().map(|r| r.number).collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn ahw_recommends_both() {
        let rows = recommend_algorithm(PropertySet::of(&[WP, H, WI, A, L]), Variant::Min);
        assert!(rows.iter().any(|r| r.algorithm == Algorithm::Bellman));
        assert!(rows.iter().any(|r| r.algorithm == Algorithm::Mda));
    }
}
