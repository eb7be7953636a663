//! Crossing-change count of the inductive construction that realizes
//! `T(n,m) ≤ T(a,b)` for `n ≤ a`, `m ≤ b`.
//!
//! While `m ≤ b - a` the construction peels a full twist on `a` strands off
//! `T(a,b)`, costing `a(a-1)/2` changes and replacing `b` by `b - a`. The
//! remaining step costs `(b-m)(a-1)/2` when `a = n` and
//! `[(b-m)(b-m-1) + (b-m)(a-(b-m)) + (a-n)(m-1)]/2` otherwise.

use crate::error::{Error, Result};

pub fn theorem1_crossing_budget(n: u64, m: u64, a: u64, b: u64) -> Result<u64> {
    let (n, m) = (n.min(m), n.max(m));
    let (a, b) = (a.min(b), a.max(b));
    if n < 1 || a < 1 {
        return Err(Error::InvalidArgument("parameters must be positive".into()));
    }
    if n > a || m > b {
        return Err(Error::InvalidArgument(format!(
            "T({n},{m}) is not dominated by T({a},{b})"
        )));
    }
    let mut total = 0u64;
    let mut b = b;
    if a == n {
        return Ok((b - m) * (a - 1) / 2);
    }
    while m + a <= b {
        total += a * (a - 1) / 2;
        b -= a;
    }
    let d = b - m;
    // d < a here, so a - d is positive
    let twice = d * d.saturating_sub(1) + d * (a - d) + (a - n) * (m - 1);
    debug_assert_eq!(twice % 2, 0);
    Ok(total + twice / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(theorem1_crossing_budget(3, 4, 3, 7), Ok(3));
        assert_eq!(theorem1_crossing_budget(2, 5, 3, 7), Ok(4));
        assert_eq!(theorem1_crossing_budget(4, 5, 4, 5), Ok(0));
        assert!(theorem1_crossing_budget(3, 4, 2, 9).is_err());
    }

    #[test]
    fn equals_unknotting_number_difference() {
        for a in 1..=14u64 {
            for b in a..=14 {
                for n in 1..=a {
                    for m in n..=b {
                        let u = |p: u64, q: u64| (p - 1) * (q - 1) / 2;
                        if num_integer::gcd(a, b) != 1 || num_integer::gcd(n, m) != 1 {
                            continue;
                        }
                        assert_eq!(
                            theorem1_crossing_budget(n, m, a, b),
                            Ok(u(a, b) - u(n, m)),
                            "({n},{m},{a},{b})"
                        );
                    }
                }
            }
        }
    }
}
