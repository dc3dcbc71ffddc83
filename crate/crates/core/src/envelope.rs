//! Containment and overlap between envelope bounds.

use crate::model::Bounds;

/// Result of asking whether `inner` fits inside `outer`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Containment {
    pub contained: bool,
    /// Measure of `inner ∩ outer` over the measure of `inner`. For a
    /// zero-length interval it is 1 when the point lies inside `outer`, else 0.
    pub overlap: f64,
}

/// Compares two bounds of the same form; `None` when one is an interval and
/// the other a label set.
pub fn containment(inner: &Bounds, outer: &Bounds) -> Option<Containment> {
    match (inner, outer) {
        (Bounds::Interval { min: a, max: b }, Bounds::Interval { min: lo, max: hi }) => {
            let contained = lo <= a && b <= hi;
            let length = b - a;
            let overlap = if length > 0.0 {
                let shared = (b.min(*hi) - a.max(*lo)).max(0.0);
                (shared / length).clamp(0.0, 1.0)
            } else if contained {
                1.0
            } else {
                0.0
            };
            Some(Containment { contained, overlap })
        }
        (Bounds::Labels(inner), Bounds::Labels(outer)) => {
            let shared = inner.iter().filter(|l| outer.contains(l)).count();
            let contained = shared == inner.len();
            let overlap = if inner.is_empty() {
                1.0
            } else {
                shared as f64 / inner.len() as f64
            };
            Some(Containment { contained, overlap })
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(min: f64, max: f64) -> Bounds {
        Bounds::Interval { min, max }
    }

    #[test]
    fn interval_cases() {
        let c = containment(&iv(0.0, 40.0), &iv(-40.0, 85.0)).unwrap();
        assert!(c.contained);
        assert_eq!(c.overlap, 1.0);

        let c = containment(&iv(0.0, 100.0), &iv(0.0, 85.0)).unwrap();
        assert!(!c.contained);
        assert_eq!(c.overlap, 0.85);

        let c = containment(&iv(0.0, 80.0), &iv(0.0, 50.0)).unwrap();
        assert!(!c.contained);
        assert_eq!(c.overlap, 0.625);

        let c = containment(&iv(90.0, 100.0), &iv(0.0, 50.0)).unwrap();
        assert_eq!(c.overlap, 0.0);
    }

    #[test]
    fn degenerate_point() {
        assert_eq!(containment(&iv(3.0, 3.0), &iv(0.0, 5.0)).unwrap().overlap, 1.0);
        let outside = containment(&iv(7.0, 7.0), &iv(0.0, 5.0)).unwrap();
        assert!(!outside.contained);
        assert_eq!(outside.overlap, 0.0);
    }

    #[test]
    fn labels_use_set_containment() {
        let inner = Bounds::Labels(vec!["a".into(), "b".into()]);
        let outer = Bounds::Labels(vec!["b".into(), "c".into()]);
        let c = containment(&inner, &outer).unwrap();
        assert!(!c.contained);
        assert_eq!(c.overlap, 0.5);
        assert!(containment(&inner, &iv(0.0, 1.0)).is_none());
    }
}
