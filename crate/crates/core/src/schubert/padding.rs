use crate::exact_linalg::{format_rational, Rational};

use super::condition::{iota, SchubertCondition};
use super::SchubertError;

/// Appends `r = k(m−k) − Σ codim` copies of `ι`, placed at the first `r`
/// fresh points in order, so that the padded problem has expected
/// dimension 0.
pub fn pad_to_zero_dimensional(
    k: usize,
    m: usize,
    conditions: &[(SchubertCondition, Rational)],
    fresh: &[Rational],
) -> Result<Vec<(SchubertCondition, Rational)>, SchubertError> {
    let iota = iota(k, m)?;
    for (c, _) in conditions {
        if (c.k(), c.m()) != (k, m) {
            return Err(SchubertError::DimensionMismatch {
                point: (k, m),
                condition: (c.k(), c.m()),
                flag: m,
            });
        }
    }
    let total: usize = conditions.iter().map(|(c, _)| c.codim()).sum();
    let expected = (k * (m - k)) as i64 - total as i64;
    if expected < 0 {
        return Err(SchubertError::NegativeExpectedDimension { expected });
    }
    let r = expected as usize;
    if fresh.len() < r {
        return Err(SchubertError::NotEnoughFreshPoints {
            needed: r,
            given: fresh.len(),
        });
    }
    let mut used: Vec<&Rational> = conditions.iter().map(|(_, t)| t).collect();
    let mut padded = conditions.to_vec();
    for u in &fresh[..r] {
        if used.contains(&u) {
            return Err(SchubertError::PointNotFresh(format_rational(u)));
        }
        used.push(u);
        padded.push((iota.clone(), u.clone()));
    }
    Ok(padded)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::int;

    #[test]
    fn pads_two_iotas_to_four() {
        let c = iota(2, 4).unwrap();
        let input = vec![(c.clone(), int(0)), (c.clone(), int(1))];
        let out = pad_to_zero_dimensional(2, 4, &input, &[int(5), int(7), int(9)]).unwrap();
        assert_eq!(out.len(), 4);
        assert_eq!(out[2], (c.clone(), int(5)));
        assert_eq!(out[3], (c, int(7)));
        let total: usize = out.iter().map(|(c, _)| c.codim()).sum();
        assert_eq!(total, 4);
    }

    #[test]
    fn zero_dimensional_input_is_unchanged() {
        let point = SchubertCondition::new(2, 4, vec![1, 2]).unwrap();
        let input = vec![(point, int(3))];
        assert_eq!(
            pad_to_zero_dimensional(2, 4, &input, &[int(1)]).unwrap(),
            input
        );
    }

    #[test]
    fn errors() {
        let point = SchubertCondition::new(2, 4, vec![1, 2]).unwrap();
        let c = iota(2, 4).unwrap();
        assert_eq!(
            pad_to_zero_dimensional(2, 4, &[(point, int(0)), (c.clone(), int(1))], &[]),
            Err(SchubertError::NegativeExpectedDimension { expected: -1 })
        );
        assert_eq!(
            pad_to_zero_dimensional(2, 4, &[(c.clone(), int(0))], &[int(1)]),
            Err(SchubertError::NotEnoughFreshPoints {
                needed: 3,
                given: 1
            })
        );
        assert!(matches!(
            pad_to_zero_dimensional(2, 4, &[(c.clone(), int(0))], &[int(1), int(0), int(2)]),
            Err(SchubertError::PointNotFresh(_))
        ));
        assert!(matches!(
            pad_to_zero_dimensional(2, 5, &[(c, int(0))], &[]),
            Err(SchubertError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn empty_input_pads_fully() {
        let fresh: Vec<Rational> = (0..6).map(int).collect();
        let out = pad_to_zero_dimensional(2, 5, &[], &fresh).unwrap();
        assert_eq!(out.len(), 6);
    }
}
