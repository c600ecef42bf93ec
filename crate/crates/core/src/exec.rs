//! Tuple-check execution: data-parallel over basis tuples with a sequential
//! fallback.
//!
//! All identity checks in this crate quantify over basis tuples of a small
//! index space. They are pure, so the tuples can be checked in parallel; the
//! reported failure is always the lexicographically earliest one, whichever
//! mode ran.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution mode for tuple sweeps. `Par` uses the rayon thread pool when the
/// `parallel` feature is enabled and degrades to sequential otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Seq,
    Par,
}

impl Default for Exec {
    fn default() -> Self {
        Exec::Par
    }
}

/// Earliest failure over `0..count`, or `None` when every tuple passes.
pub fn first_failure_with<T, F>(mode: Exec, count: usize, check: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    match mode {
        Exec::Seq => (0..count).find_map(check),
        Exec::Par => {
            #[cfg(feature = "parallel")]
            {
                (0..count).into_par_iter().find_map_first(check)
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..count).find_map(check)
            }
        }
    }
}

pub fn first_failure<T, F>(count: usize, check: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    first_failure_with(Exec::default(), count, check)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn earliest_failure_wins_in_both_modes() {
        let check = |i: usize| if i % 7 == 3 { Some(i) } else { None };
        assert_eq!(first_failure_with(Exec::Seq, 1000, check), Some(3));
        assert_eq!(first_failure_with(Exec::Par, 1000, check), Some(3));
        assert_eq!(first_failure_with(Exec::Par, 3, check), None);
    }
}
