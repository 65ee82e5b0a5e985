//! Subgroup calculus: generation, normality, centralizers, Sylow subgroups
//! and the odd core.

use super::{Group, Subgroup};
use crate::numtheory::{is_prime, prime_factors};

impl Group {
    /// Smallest subgroup containing `gens`.
    pub fn generated(&self, gens: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut elems = vec![0usize];
        let mut used: Vec<usize> = Vec::new();
        for &g in gens {
            if member[g] {
                continue;
            }
            used.push(g);
            // Re-close: right-multiply everything found so far by every
            // generator until nothing new appears.
            let mut i = 0;
            // Elements already present must also be multiplied by the new
            // generator, so restart the scan.
            while i < elems.len() {
                let x = elems[i];
                for &s in &used {
                    let y = self.mul(x, s);
                    if !member[y] {
                        member[y] = true;
                        elems.push(y);
                    }
                }
                i += 1;
            }
        }
        elems.sort_unstable();
        Subgroup::from_sorted_unchecked(elems)
    }

    /// `⟨gens⟩` if its order is at most `cap`, otherwise `None`.
    pub(crate) fn generated_capped(&self, gens: &[usize], cap: usize) -> Option<Vec<usize>> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut elems = vec![0usize];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !member[y] {
                    if elems.len() == cap {
                        return None;
                    }
                    member[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        Some(elems)
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut gens: Vec<usize> = a.elements().to_vec();
        gens.extend_from_slice(b.elements());
        self.generated(&gens)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        Subgroup::from_sorted_unchecked(a.elements().iter().copied().filter(|&x| b.contains(x)).collect())
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        let member = h.mask(self.order());
        let gens = self.small_generating_set(h);
        (0..self.order()).all(|g| gens.iter().all(|&x| member[self.conj(g, x)]))
    }

    /// A short generating set of `h`, picked greedily by least id.
    pub fn small_generating_set(&self, h: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = Subgroup::trivial();
        for &x in h.elements() {
            if current.order() == h.order() {
                break;
            }
            if !current.contains(x) {
                gens.push(x);
                current = self.generated(&gens);
            }
        }
        gens
    }

    /// Normal closure of a set: the subgroup generated by all conjugates.
    pub fn normal_closure(&self, s: &[usize]) -> Subgroup {
        let cc = self.conjugacy();
        let mut gens = Vec::new();
        for &x in s {
            gens.extend_from_slice(&cc.classes[cc.class_of[x]]);
        }
        self.generated(&gens)
    }

    pub fn centralizer(&self, s: &[usize]) -> Subgroup {
        Subgroup::from_sorted_unchecked(
            (0..self.order()).filter(|&g| s.iter().all(|&x| self.mul(g, x) == self.mul(x, g))).collect(),
        )
    }

    pub fn center(&self) -> Subgroup {
        let all: Vec<usize> = self.elements().collect();
        self.centralizer(&all)
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let member = h.mask(self.order());
        let gens = self.small_generating_set(h);
        Subgroup::from_sorted_unchecked(
            (0..self.order()).filter(|&g| gens.iter().all(|&x| member[self.conj(g, x)])).collect(),
        )
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut comms = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let c = self.commutator(x, y);
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        self.generated(&comms)
    }

    /// Last term of the derived series (the perfect residuum).
    pub fn perfect_core(&self) -> Subgroup {
        let mut current = Subgroup::whole(self);
        loop {
            let (h, emb) = self.subgroup_as_group(&current);
            let d = h.derived_subgroup();
            if d.order() == current.order() {
                return current;
            }
            current = d.map_through(&emb);
        }
    }

    /// Intersection of all conjugates of `h`.
    pub fn core(&self, h: &Subgroup) -> Subgroup {
        let n = self.order();
        let mut keep = h.mask(n);
        for g in 0..n {
            for &x in h.elements() {
                if keep[x] && !h.contains(self.conj(g, x)) {
                    keep[x] = false;
                }
            }
        }
        // x stays iff g x g^-1 ∈ h for all g, i.e. x lies in every g^-1 h g.
        Subgroup::from_sorted_unchecked((0..n).filter(|&x| keep[x]).collect())
    }

    /// Sylow `p`-subgroup by normalizer ascent from the trivial subgroup:
    /// while `P` is not Sylow, `p` divides `[N(P):P]`, so some `x ∈ N(P)∖P`
    /// has `x^p ∈ P`; the least such `x` is adjoined.
    pub fn sylow_subgroup(&self, p: usize) -> Subgroup {
        let n = self.order();
        let mut target = 1;
        let mut m = n;
        while m % p == 0 {
            m /= p;
            target *= p;
        }
        let mut current = Subgroup::trivial();
        while current.order() < target {
            let norm = self.normalizer(&current);
            let x = norm
                .elements()
                .iter()
                .copied()
                .find(|&x| !current.contains(x) && current.contains(self.pow(x, p as i64)))
                .expect("Sylow ascent always finds a p-element in the normalizer");
            let mut gens = self.small_generating_set(&current);
            gens.push(x);
            current = self.generated(&gens);
        }
        current
    }

    /// The largest normal subgroup of odd order: the join of the normal
    /// closures of odd-order elements whose closure is itself odd.
    pub fn odd_core(&self) -> Subgroup {
        let mut core = Subgroup::trivial();
        for class in self.conjugacy_classes() {
            let x = class[0];
            if self.element_order(x) % 2 == 0 || core.contains(x) {
                continue;
            }
            let nc = self.normal_closure(&[x]);
            if nc.order() % 2 == 1 {
                core = self.join(&core, &nc);
            }
        }
        core
    }

    /// Every normal subgroup, sorted by (order, elements). Exhaustive: the
    /// normal subgroups are exactly the joins of normal closures of classes.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        use std::collections::BTreeSet;
        let closures: Vec<Subgroup> = {
            let mut v: Vec<Subgroup> = self.conjugacy_classes().iter().map(|c| self.normal_closure(&[c[0]])).collect();
            v.sort();
            v.dedup();
            v
        };
        let mut found: BTreeSet<Subgroup> = BTreeSet::new();
        found.insert(Subgroup::trivial());
        let mut frontier: Vec<Subgroup> = vec![Subgroup::trivial()];
        while let Some(s) = frontier.pop() {
            for c in &closures {
                if c.is_subset_of(&s) {
                    continue;
                }
                let j = self.join(&s, c);
                if found.insert(j.clone()) {
                    frontier.push(j);
                }
            }
        }
        let mut v: Vec<Subgroup> = found.into_iter().collect();
        v.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
        v
    }

    /// Smallest normal subgroup with `p`-group quotient: generated by the
    /// elements of order prime to `p`.
    pub fn p_residual(&self, p: usize) -> Subgroup {
        let gens: Vec<usize> = (0..self.order()).filter(|&x| self.element_order(x) % p != 0).collect();
        self.generated(&gens)
    }

    /// Primes dividing the order.
    pub fn prime_divisors(&self) -> Vec<usize> {
        prime_factors(self.order() as u64).into_iter().map(|(p, _)| p as usize).collect()
    }

    /// Elements whose order is prime.
    pub fn prime_order_elements(&self) -> Vec<usize> {
        (1..self.order()).filter(|&x| is_prime(self.element_order(x) as u64)).collect()
    }
}
