//! Small integer helpers shared by the closed forms.

use num_integer::Integer;

/// Ceiling of `p / q` for `q > 0`, valid for negative `p`.
pub fn ceil_div(p: i64, q: i64) -> i64 {
    assert!(q > 0, "ceil_div needs a positive divisor");
    Integer::div_floor(&(p + q - 1), &q)
}

pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |acc, &v| acc.gcd(&v))
}

/// Returns `(x, y)` with `a*x + b*y = gcd(a, b)`.
pub fn bezout(a: i64, b: i64) -> (i64, i64) {
    let ext = a.extended_gcd(&b);
    (ext.x, ext.y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_div_negative_numerators() {
        assert_eq!(ceil_div(-1, 3), 0);
        assert_eq!(ceil_div(-3, 3), -1);
        assert_eq!(ceil_div(-4, 3), -1);
        assert_eq!(ceil_div(4, 5), 1);
        assert_eq!(ceil_div(5, 5), 1);
        assert_eq!(ceil_div(0, 7), 0);
    }

    #[test]
    fn ceil_div_matches_float_ceiling() {
        for p in -50i64..50 {
            for q in 1i64..12 {
                assert_eq!(ceil_div(p, q), (p as f64 / q as f64).ceil() as i64);
            }
        }
    }

    #[test]
    fn bezout_identity() {
        for a in 1i64..30 {
            for b in 1i64..30 {
                let (x, y) = bezout(a, b);
                assert_eq!(a * x + b * y, a.gcd(&b));
            }
        }
    }

    #[test]
    fn gcd_of_list() {
        assert_eq!(gcd_all(&[4, 6, 10]), 2);
        assert_eq!(gcd_all(&[15, 17, 36]), 1);
        assert_eq!(gcd_all(&[]), 0);
    }
}
