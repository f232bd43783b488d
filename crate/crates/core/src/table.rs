//! Finite weight spaces given by explicit tables: a weight set, strict
//! dominance pairs, and per-arc update tables. Used to encode hand-made
//! counterexample instances.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::CoreError;
use crate::graph::ArcRef;
use crate::space::{ComparisonResult, RelationKind, WeightSpace};

/// Index into a [`TableWeightSpace`]'s weight list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TableWeight(pub u16);

/// Fallback for weights without an explicit entry in an arc's update table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableDefault {
    /// Missing entries are an error.
    Missing,
    /// The weight passes through unchanged.
    Identity,
    /// Every weight maps to this one.
    Const(String),
}

/// Update table of a single arc, in terms of weight names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcTable {
    pub entries: Vec<(String, String)>,
    pub default: TableDefault,
}

impl ArcTable {
    pub fn new(entries: &[(&str, &str)], default: TableDefault) -> ArcTable {
        ArcTable {
            entries: entries.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
            default,
        }
    }

    pub fn identity() -> ArcTable {
        ArcTable::new(&[], TableDefault::Identity)
    }
}

#[derive(Debug, Clone)]
enum Fallback {
    Missing,
    Identity,
    Const(TableWeight),
}

#[derive(Debug, Clone)]
struct ResolvedArc {
    map: HashMap<TableWeight, TableWeight>,
    fallback: Fallback,
}

#[derive(Debug, Clone)]
pub struct TableWeightSpace {
    names: Vec<String>,
    index: HashMap<String, TableWeight>,
    /// `less[a][b]` iff `a ≺ b` after transitive closure.
    less: Vec<Vec<bool>>,
    strict_pairs: Vec<(String, String)>,
    arcs: Vec<ResolvedArc>,
    arc_tables: Vec<ArcTable>,
    initial: TableWeight,
    leo_rank: Option<Vec<usize>>,
    kind: RelationKind,
}

impl TableWeightSpace {
    /// Builds the space. With [`RelationKind::PartialOrder`] the strict
    /// pairs are transitively closed and must not produce `x ≺ x`; with
    /// [`RelationKind::QuasiTransitive`] they are used as given and only
    /// antisymmetry is enforced.
    pub fn new(
        names: &[&str],
        strict_pairs: &[(&str, &str)],
        initial: &str,
        arcs: Vec<ArcTable>,
        leo: Option<&[&str]>,
        kind: RelationKind,
    ) -> Result<TableWeightSpace, CoreError> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        if names.len() > u16::MAX as usize {
            return Err(CoreError::InvalidParameter("too many table weights".into()));
        }
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), TableWeight(i as u16)).is_some() {
                return Err(CoreError::InvalidParameter(format!("duplicate table weight `{n}`")));
            }
        }
        let lookup = |n: &str| {
            index
                .get(n)
                .copied()
                .ok_or_else(|| CoreError::DomainMismatch(n.to_string()))
        };
        let k = names.len();
        let mut less = vec![vec![false; k]; k];
        for (a, b) in strict_pairs {
            let (a, b) = (lookup(a)?, lookup(b)?);
            less[a.0 as usize][b.0 as usize] = true;
        }
        if kind == RelationKind::PartialOrder {
            for m in 0..k {
                let through = less[m].clone();
                for row in less.iter_mut().filter(|row| row[m]) {
                    for (x, &y) in row.iter_mut().zip(&through) {
                        *x |= y;
                    }
                }
            }
        }
        for i in 0..k {
            if less[i][i] {
                return Err(CoreError::CyclicOrder(names[i].clone()));
            }
            if (0..k).any(|j| less[i][j] && less[j][i]) {
                return Err(CoreError::CyclicOrder(names[i].clone()));
            }
        }
        let mut resolved = Vec::with_capacity(arcs.len());
        for t in &arcs {
            let mut map = HashMap::new();
            for (from, to) in &t.entries {
                map.insert(lookup(from)?, lookup(to)?);
            }
            let fallback = match &t.default {
                TableDefault::Missing => Fallback::Missing,
                TableDefault::Identity => Fallback::Identity,
                TableDefault::Const(n) => Fallback::Const(lookup(n)?),
            };
            resolved.push(ResolvedArc { map, fallback });
        }
        let leo_rank = match leo {
            None => None,
            Some(order) => {
                let mut rank = vec![usize::MAX; k];
                for (pos, n) in order.iter().enumerate() {
                    let w = lookup(n)?;
                    if rank[w.0 as usize] != usize::MAX {
                        return Err(CoreError::InvalidParameter(format!("`{n}` repeated in leo order")));
                    }
                    rank[w.0 as usize] = pos;
                }
                if let Some(missing) = rank.iter().position(|&r| r == usize::MAX) {
                    return Err(CoreError::InvalidParameter(format!(
                        "leo order misses `{}`",
                        names[missing]
                    )));
                }
                Some(rank)
            }
        };
        let initial = lookup(initial)?;
        Ok(TableWeightSpace {
            strict_pairs: strict_pairs
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
            names,
            index,
            less,
            arcs: resolved,
            arc_tables: arcs,
            initial,
            leo_rank,
            kind,
        })
    }

    pub fn weight(&self, name: &str) -> Result<TableWeight, CoreError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| CoreError::DomainMismatch(name.to_string()))
    }

    pub fn name(&self, w: TableWeight) -> &str {
        &self.names[w.0 as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn strict_pairs(&self) -> &[(String, String)] {
        &self.strict_pairs
    }

    pub fn arc_tables(&self) -> &[ArcTable] {
        &self.arc_tables
    }

    pub fn initial_name(&self) -> &str {
        self.name(self.initial)
    }

    pub fn leo_order(&self) -> Option<Vec<&str>> {
        let rank = self.leo_rank.as_ref()?;
        let mut order: Vec<usize> = (0..self.names.len()).collect();
        order.sort_by_key(|&i| rank[i]);
        Some(order.into_iter().map(|i| self.names[i].as_str()).collect())
    }

    pub fn all_weights(&self) -> impl Iterator<Item = TableWeight> {
        (0..self.names.len() as u16).map(TableWeight)
    }

    /// The closed strict relation as a boolean matrix.
    pub fn strict_matrix(&self) -> &[Vec<bool>] {
        &self.less
    }
}

impl WeightSpace for TableWeightSpace {
    type Weight = TableWeight;

    fn compare(&self, a: &TableWeight, b: &TableWeight) -> ComparisonResult {
        let (i, j) = (a.0 as usize, b.0 as usize);
        if i == j {
            ComparisonResult::Equal
        } else if self.less[i][j] {
            ComparisonResult::Less
        } else if self.less[j][i] {
            ComparisonResult::Greater
        } else {
            ComparisonResult::Incomparable
        }
    }

    fn extend(&self, w: &TableWeight, arc: ArcRef) -> Result<TableWeight, CoreError> {
        let table = &self.arcs[arc.id];
        if let Some(next) = table.map.get(w) {
            return Ok(*next);
        }
        match table.fallback {
            Fallback::Identity => Ok(*w),
            Fallback::Const(c) => Ok(c),
            Fallback::Missing => Err(CoreError::MissingUpdateEntry {
                weight: self.name(*w).to_string(),
                arc: arc.id,
            }),
        }
    }

    fn initial(&self) -> TableWeight {
        self.initial
    }

    fn arc_count(&self) -> Option<usize> {
        Some(self.arcs.len())
    }

    fn leo_cmp(&self, a: &TableWeight, b: &TableWeight) -> Option<Ordering> {
        let rank = self.leo_rank.as_ref()?;
        Some(rank[a.0 as usize].cmp(&rank[b.0 as usize]))
    }

    fn has_leo(&self) -> bool {
        self.leo_rank.is_some()
    }

    fn relation_kind(&self) -> RelationKind {
        self.kind
    }

    fn check_domain(&self, w: &TableWeight) -> Result<(), CoreError> {
        if (w.0 as usize) < self.names.len() {
            Ok(())
        } else {
            Err(CoreError::DomainMismatch(format!("#{}", w.0)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::compare;
    use ComparisonResult::*;

    fn chain() -> TableWeightSpace {
        TableWeightSpace::new(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c")],
            "a",
            vec![ArcTable::identity()],
            None,
            RelationKind::PartialOrder,
        )
        .unwrap()
    }

    /// Reachability by repeated relaxation, independent of the
    /// construction-time closure loop.
    fn reachable(pairs: &[(usize, usize)], k: usize) -> Vec<Vec<bool>> {
        let mut r = vec![vec![false; k]; k];
        for &(a, b) in pairs {
            r[a][b] = true;
        }
        loop {
            let mut changed = false;
            for i in 0..k {
                for j in 0..k {
                    if !r[i][j] && (0..k).any(|m| r[i][m] && r[m][j]) {
                        r[i][j] = true;
                        changed = true;
                    }
                }
            }
            if !changed {
                return r;
            }
        }
    }

    #[test]
    fn closure_is_transitive() {
        let s = chain();
        let (a, c, d) = (s.weight("a").unwrap(), s.weight("c").unwrap(), s.weight("d").unwrap());
        assert_eq!(s.compare(&a, &c), Less);
        assert_eq!(s.compare(&c, &a), Greater);
        assert_eq!(s.compare(&a, &d), Incomparable);
        let expected = reachable(&[(0, 1), (1, 2)], 4);
        assert_eq!(s.strict_matrix(), expected.as_slice());
    }

    #[test]
    fn cyclic_pairs_rejected() {
        let err = TableWeightSpace::new(
            &["x", "y"],
            &[("x", "y"), ("y", "x")],
            "x",
            vec![],
            None,
            RelationKind::PartialOrder,
        )
        .unwrap_err();
        assert!(matches!(err, CoreError::CyclicOrder(_)));
    }

    #[test]
    fn unknown_weight_is_domain_error() {
        let s = chain();
        assert!(matches!(s.weight("zz"), Err(CoreError::DomainMismatch(_))));
        assert!(compare(&s, &TableWeight(9), &TableWeight(0)).is_err());
    }

    #[test]
    fn missing_entry_without_default() {
        let s = TableWeightSpace::new(
            &["a", "b"],
            &[],
            "a",
            vec![ArcTable::new(&[("a", "b")], TableDefault::Missing)],
            None,
            RelationKind::PartialOrder,
        )
        .unwrap();
        let arc = ArcRef {
            id: 0,
            tail: 0,
            head: 1,
        };
        assert_eq!(s.extend(&TableWeight(0), arc), Ok(TableWeight(1)));
        assert!(matches!(
            s.extend(&TableWeight(1), arc),
            Err(CoreError::MissingUpdateEntry { .. })
        ));
    }

    proptest::proptest! {
        #[test]
        fn compare_agrees_with_reachability(
            edges in proptest::collection::vec((0usize..6, 0usize..6), 0..10)
        ) {
            // keep only forward pairs so the relation is acyclic
            let pairs: Vec<(usize, usize)> = edges.into_iter().filter(|(a, b)| a < b).collect();
            let names = ["w0", "w1", "w2", "w3", "w4", "w5"];
            let named: Vec<(&str, &str)> = pairs.iter().map(|&(a, b)| (names[a], names[b])).collect();
            let s = TableWeightSpace::new(&names, &named, "w0", vec![], None, RelationKind::PartialOrder).unwrap();
            let oracle = reachable(&pairs, 6);
            for (i, reach) in oracle.iter().enumerate() {
                for j in 0..6 {
                    let got = s.compare(&TableWeight(i as u16), &TableWeight(j as u16));
                    let want = if i == j { Equal } else if reach[j] { Less } else if oracle[j][i] { Greater } else { Incomparable };
                    proptest::prop_assert_eq!(got, want);
                    proptest::prop_assert_eq!(s.compare(&TableWeight(j as u16), &TableWeight(i as u16)), want.reverse());
                }
            }
        }
    }
}
