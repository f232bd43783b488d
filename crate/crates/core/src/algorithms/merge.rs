//! The two merge procedures of the label-correcting solver. Both take the
//! incumbent frontier and a candidate stream and return the new frontier in
//! a deterministic order: surviving incumbents first, then surviving
//! candidates in arrival order.

use crate::space::ComparisonResult;

/// Keeps one representative per nondominated weight. Ties go to the
/// incumbent, then to the earlier candidate.
pub fn min_merge<T, I, F>(frontier: &[T], candidates: I, cmp: F) -> Vec<T>
where
    T: Copy + PartialEq,
    I: IntoIterator<Item = T>,
    F: FnMut(T, T) -> ComparisonResult,
{
    merge(frontier, candidates, cmp, |c| c.is_le())
}

/// Drops only strictly dominated labels; equal weights all survive.
pub fn max_merge<T, I, F>(frontier: &[T], candidates: I, cmp: F) -> Vec<T>
where
    T: Copy + PartialEq,
    I: IntoIterator<Item = T>,
    F: FnMut(T, T) -> ComparisonResult,
{
    merge(frontier, candidates, cmp, |c| c == ComparisonResult::Less)
}

fn merge<T, I, F>(frontier: &[T], candidates: I, mut cmp: F, blocks: fn(ComparisonResult) -> bool) -> Vec<T>
where
    T: Copy + PartialEq,
    I: IntoIterator<Item = T>,
    F: FnMut(T, T) -> ComparisonResult,
{
    let mut out = frontier.to_vec();
    let mut doomed = Vec::new();
    'next: for c in candidates {
        if out.contains(&c) {
            continue;
        }
        doomed.clear();
        for (i, &r) in out.iter().enumerate() {
            let rel = cmp(r, c);
            if blocks(rel) {
                continue 'next;
            }
            if rel == ComparisonResult::Greater {
                doomed.push(i);
            }
        }
        for &i in doomed.iter().rev() {
            out.remove(i);
        }
        out.push(c);
    }
    out
}
