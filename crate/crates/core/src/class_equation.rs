//! The class equation `1/c1 + 1/c2 + 1/c3 = 1 + 2/g` for a group of order
//! `2g` partitioned by its maximal cyclic subgroups of orders `2cᵢ`.

use num_rational::Ratio;

use crate::numtheory::prime_factors;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassEquationSolution {
    pub c1: u64,
    pub c2: u64,
    pub c3: u64,
    pub g: u64,
}

impl ClassEquationSolution {
    /// Exact check of the identity over the rationals.
    pub fn holds(&self) -> bool {
        let r = |n: u64| Ratio::new(1i64, n as i64);
        r(self.c1) + r(self.c2) + r(self.c3) == Ratio::from_integer(1) + Ratio::new(2, self.g as i64)
    }
}

/// All sorted triples `2 ≤ c1 ≤ c2 ≤ c3` solving the equation for some
/// `2 ≤ g ≤ max_g`, ordered by `(g, c1, c2, c3)`.
///
/// The left side exceeds 1, so `3/c1 > 1` and `1/c1 + 2/c2 > 1`, which bounds
/// `c1 ≤ 2` and `c2 ≤ 3`; `c3` is then determined by `g`.
pub fn solve_class_equation_unrestricted(max_g: u64) -> Vec<ClassEquationSolution> {
    let mut out = Vec::new();
    for g in 2..=max_g {
        let rhs = Ratio::from_integer(1i64) + Ratio::new(2, g as i64);
        for c1 in 2..=2u64 {
            for c2 in c1..=3u64 {
                let rest = rhs - Ratio::new(1, c1 as i64) - Ratio::new(1, c2 as i64);
                if rest <= Ratio::from_integer(0) || *rest.numer() != 1 {
                    continue;
                }
                let c3 = *rest.denom() as u64;
                if c3 >= c2 {
                    out.push(ClassEquationSolution { c1, c2, c3, g });
                }
            }
        }
    }
    out
}

/// The numbering used to derive `|G| = 120`: `c1` is even, and each later
/// `cᵢ` is divisible by the smallest prime dividing `g` that divides none of
/// the earlier ones. Each `cᵢ` must also divide `g`.
pub fn satisfies_prime_labeling(c: [u64; 3], g: u64) -> bool {
    if c.iter().any(|&ci| ci < 2 || g % ci != 0) || c[0] % 2 != 0 {
        return false;
    }
    let primes: Vec<u64> = prime_factors(g).into_iter().map(|(p, _)| p).collect();
    for i in 1..3 {
        let fresh = primes.iter().copied().find(|&p| c[..i].iter().all(|&cj| cj % p != 0));
        match fresh {
            Some(p) if c[i] % p == 0 => {}
            _ => return false,
        }
    }
    true
}

/// Solutions admitting the prime labeling, reported in labeled order.
pub fn solve_class_equation(max_g: u64) -> Vec<ClassEquationSolution> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::new();
    for s in solve_class_equation_unrestricted(max_g) {
        let c = [s.c1, s.c2, s.c3];
        let labeled =
            PERMS.iter().map(|p| [c[p[0]], c[p[1]], c[p[2]]]).filter(|l| satisfies_prime_labeling(*l, s.g)).min();
        if let Some([c1, c2, c3]) = labeled {
            out.push(ClassEquationSolution { c1, c2, c3, g: s.g });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: integer cross-multiplication over a box.
    fn brute(max: u64) -> Vec<ClassEquationSolution> {
        let mut v = Vec::new();
        for g in 2..=max {
            for c1 in 2..=max {
                for c2 in c1..=max {
                    for c3 in c2..=max {
                        if g * (c2 * c3 + c1 * c3 + c1 * c2) == c1 * c2 * c3 * (g + 2) {
                            v.push(ClassEquationSolution { c1, c2, c3, g });
                        }
                    }
                }
            }
        }
        v
    }

    #[test]
    fn unrestricted_matches_brute_force() {
        let oracle = brute(100);
        let got = solve_class_equation_unrestricted(100);
        assert_eq!(got, oracle);
        assert!(got.iter().all(|s| s.holds()));
    }

    #[test]
    fn unique_labeled_solution() {
        assert_eq!(solve_class_equation(10_000), vec![ClassEquationSolution { c1: 2, c2: 3, c3: 5, g: 60 }]);
        assert!(solve_class_equation(50).is_empty());
    }

    #[test]
    fn two_three_five() {
        let s = ClassEquationSolution { c1: 2, c2: 3, c3: 5, g: 60 };
        assert!(s.holds());
        assert_eq!(Ratio::new(1i64, 2) + Ratio::new(1, 3) + Ratio::new(1, 5) - 1, Ratio::new(2, 60));
    }

    #[test]
    fn labeling() {
        assert!(satisfies_prime_labeling([2, 3, 5], 60));
        assert!(!satisfies_prime_labeling([2, 2, 7], 14));
        assert!(!satisfies_prime_labeling([2, 3, 4], 24));
        assert!(!satisfies_prime_labeling([3, 2, 5], 60));
    }
}
