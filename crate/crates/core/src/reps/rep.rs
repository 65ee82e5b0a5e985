//! Real orthogonal representations, induction and freeness certificates.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};

/// Default tolerance for orthogonality, homomorphism and freeness checks.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Groups up to this order get a dense check of every product.
const DENSE_PAIR_LIMIT: usize = 256;

/// How an induced representation permutes and twists its blocks.
#[derive(Clone, Debug)]
pub struct InducedStructure {
    pub core: Box<RealRep>,
    /// Core ids to ids of the big group.
    pub embedding: Vec<usize>,
    pub coset_reps: Vec<usize>,
    /// `perm[x][j] = i` where `x r_j ∈ r_i H`.
    pub perm: Vec<Vec<usize>>,
    /// Core id of `r_i⁻¹ x r_j` for the `i` above.
    pub core_elem: Vec<Vec<usize>>,
}

/// A homomorphism from a group to real orthogonal matrices.
#[derive(Clone, Debug)]
pub struct RealRep {
    pub group: Group,
    pub dim: usize,
    pub matrices: Vec<DMatrix<f64>>,
    pub tol: f64,
    pub induced: Option<InducedStructure>,
}

impl RealRep {
    /// Checks orthogonality and the homomorphism property; the identity's
    /// matrix is replaced by an exact identity matrix.
    pub fn new(group: Group, mut matrices: Vec<DMatrix<f64>>, tol: f64) -> Result<RealRep> {
        let rep = RealRep::assemble(group, &mut matrices, tol)?;
        let rep = RealRep { matrices, ..rep };
        rep.check_orthogonal()?;
        rep.check_dense_homomorphism()?;
        Ok(rep)
    }

    fn assemble(group: Group, matrices: &mut [DMatrix<f64>], tol: f64) -> Result<RealRep> {
        if !(tol > 0.0) {
            return Err(Error::BadParameter(format!("tolerance {tol} must be positive")));
        }
        if matrices.len() != group.order() {
            return Err(Error::BadRepresentation(format!(
                "{} matrices for {} elements",
                matrices.len(),
                group.order()
            )));
        }
        let dim = matrices[0].nrows();
        if matrices.iter().any(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(Error::BadRepresentation("matrices differ in shape".into()));
        }
        if (&matrices[0] - DMatrix::<f64>::identity(dim, dim)).amax() > tol {
            return Err(Error::BadRepresentation("identity does not map to the identity matrix".into()));
        }
        matrices[0] = DMatrix::identity(dim, dim);
        Ok(RealRep { group, dim, matrices: Vec::new(), tol, induced: None })
    }

    pub fn matrix(&self, x: usize) -> &DMatrix<f64> {
        &self.matrices[x]
    }

    pub fn traces(&self) -> Vec<f64> {
        self.matrices.iter().map(|m| m.trace()).collect()
    }

    fn check_orthogonal(&self) -> Result<()> {
        let id = DMatrix::<f64>::identity(self.dim, self.dim);
        for (x, m) in self.matrices.iter().enumerate() {
            let err = (m.transpose() * m - &id).amax();
            if err > self.tol {
                return Err(Error::BadRepresentation(format!("matrix of {x} is off orthogonal by {err:e}")));
            }
        }
        Ok(())
    }

    fn check_pair(&self, x: usize, y: usize) -> Result<()> {
        let err = (&self.matrices[x] * &self.matrices[y] - &self.matrices[self.group.mul(x, y)]).amax();
        if err > self.tol {
            return Err(Error::BadRepresentation(format!("product of {x} and {y} is off by {err:e}")));
        }
        Ok(())
    }

    /// Every pair for small groups. Above that, `ρ(x) ρ(s) = ρ(x s)` for all
    /// `x` and each `s` in a generating set, which implies the rest.
    fn check_dense_homomorphism(&self) -> Result<()> {
        let g = &self.group;
        if g.order() <= DENSE_PAIR_LIMIT {
            for x in g.elements() {
                for y in g.elements() {
                    self.check_pair(x, y)?;
                }
            }
        } else {
            let gens = g.small_generating_set(&Subgroup::whole(g));
            for x in g.elements() {
                for &s in &gens {
                    self.check_pair(x, s)?;
                }
            }
        }
        Ok(())
    }
}

/// The map from `H`-ids into `G`, checked to be an injective homomorphism.
fn check_embedding(h: &Group, g: &Group, embedding: &[usize]) -> Result<()> {
    if embedding.len() != h.order() || embedding.iter().any(|&x| x >= g.order()) {
        return Err(Error::BadTransversal("embedding has the wrong shape".into()));
    }
    for a in h.elements() {
        for b in h.elements() {
            if embedding[h.mul(a, b)] != g.mul(embedding[a], embedding[b]) {
                return Err(Error::BadTransversal(format!("embedding is not multiplicative at ({a}, {b})")));
            }
        }
    }
    let mut seen = vec![false; g.order()];
    for &x in embedding {
        if std::mem::replace(&mut seen[x], true) {
            return Err(Error::BadTransversal("embedding is not injective".into()));
        }
    }
    Ok(())
}

/// Least element of each left coset `x H`, in increasing order.
pub fn least_coset_reps(g: &Group, h: &Subgroup) -> Vec<usize> {
    let mut covered = vec![false; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if !covered[x] {
            reps.push(x);
            for &y in h.elements() {
                covered[g.mul(x, y)] = true;
            }
        }
    }
    reps
}

/// The representation of `g` induced from `core` along `embedding`, with
/// block `(i, j)` of `x` equal to `ρ(r_i⁻¹ x r_j)` when that lies in `H`.
pub fn induce_rep(core: &RealRep, g: &Group, embedding: &[usize], coset_reps: &[usize]) -> Result<RealRep> {
    let h = &core.group;
    check_embedding(h, g, embedding)?;
    let m = g.order() / h.order();
    if coset_reps.len() != m || g.order() % h.order() != 0 {
        return Err(Error::BadTransversal(format!("expected {m} coset representatives, got {}", coset_reps.len())));
    }
    // where[y] = (i, η) with y = r_i · embedding[η].
    let mut location = vec![None; g.order()];
    for (i, &r) in coset_reps.iter().enumerate() {
        if r >= g.order() {
            return Err(Error::BadTransversal(format!("{r} is not an element")));
        }
        for eta in h.elements() {
            let y = g.mul(r, embedding[eta]);
            if location[y].replace((i, eta)).is_some() {
                return Err(Error::BadTransversal(format!("representatives {r} and another share a coset")));
            }
        }
    }
    let location: Vec<(usize, usize)> = location.into_iter().map(|l| l.expect("cosets partition G")).collect();
    let d = core.dim;
    let mut perm = Vec::with_capacity(g.order());
    let mut core_elem = Vec::with_capacity(g.order());
    let mut matrices = Vec::with_capacity(g.order());
    for x in g.elements() {
        let mut p = Vec::with_capacity(m);
        let mut c = Vec::with_capacity(m);
        let mut mat = DMatrix::<f64>::zeros(m * d, m * d);
        for (j, &r) in coset_reps.iter().enumerate() {
            let (i, eta) = location[g.mul(x, r)];
            p.push(i);
            c.push(eta);
            mat.view_mut((i * d, j * d), (d, d)).copy_from(&core.matrices[eta]);
        }
        perm.push(p);
        core_elem.push(c);
        matrices.push(mat);
    }
    let mut rep = RealRep::assemble(g.clone(), &mut matrices, core.tol)?;
    rep.matrices = matrices;
    rep.induced = Some(InducedStructure {
        core: Box::new(core.clone()),
        embedding: embedding.to_vec(),
        coset_reps: coset_reps.to_vec(),
        perm,
        core_elem,
    });
    rep.check_orthogonal()?;
    check_block_homomorphism(&rep)?;
    Ok(rep)
}

/// Exact check of every product on the block data, given that the core is
/// a homomorphism.
fn check_block_homomorphism(rep: &RealRep) -> Result<()> {
    let s = rep.induced.as_ref().expect("induced");
    let g = &rep.group;
    let h = &s.core.group;
    for x in g.elements() {
        for y in g.elements() {
            let xy = g.mul(x, y);
            for j in 0..s.coset_reps.len() {
                let i1 = s.perm[y][j];
                let i2 = s.perm[x][i1];
                let eta = h.mul(s.core_elem[x][i1], s.core_elem[y][j]);
                if s.perm[xy][j] != i2 || s.core_elem[xy][j] != eta {
                    return Err(Error::BadRepresentation(format!("induced blocks fail at ({x}, {y})")));
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Free,
    NotFree,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Free => "free",
            Verdict::NotFree => "not_free",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// Fixed-space dimensions of every element, read off as traces of the
/// averaging projectors `(1/k) Σ_{j<k} ρ(x^j)`.
#[derive(Clone, Debug)]
pub struct FreenessCertificate {
    /// Projector trace per element; entry 0 is the dimension.
    pub traces: Vec<f64>,
    /// Maximum over nontrivial elements (0 for the trivial group).
    pub max_fixed_trace: f64,
    /// Largest distance from a projector trace to the nearest integer.
    pub integrality_error: f64,
    pub tol: f64,
    pub verdict: Verdict,
}

pub fn verify_free(rep: &RealRep) -> FreenessCertificate {
    let g = &rep.group;
    let tr = rep.traces();
    let traces: Vec<f64> = g
        .elements()
        .map(|x| {
            let k = g.element_order(x);
            let mut y = 0;
            let mut sum = 0.0;
            for _ in 0..k {
                sum += tr[y];
                y = g.mul(y, x);
            }
            sum / k as f64
        })
        .collect();
    let max_fixed_trace = traces.iter().skip(1).copied().fold(0.0f64, f64::max);
    let integrality_error = traces.iter().map(|t| (t - t.round()).abs()).fold(0.0, f64::max);
    let verdict = if max_fixed_trace < rep.tol {
        Verdict::Free
    } else if max_fixed_trace > 1.0 - rep.tol {
        Verdict::NotFree
    } else {
        Verdict::Inconclusive
    };
    FreenessCertificate { traces, max_fixed_trace, integrality_error, tol: rep.tol, verdict }
}

/// Dimension of the space of matrices commuting with the whole image,
/// computed as the numerical nullity of the stacked commutator equations
/// over a generating set.
pub fn commutant_dimension(rep: &RealRep) -> usize {
    let d = rep.dim;
    let g = &rep.group;
    let gens = g.small_generating_set(&Subgroup::whole(g));
    if gens.is_empty() {
        return d * d;
    }
    let id = DMatrix::<f64>::identity(d, d);
    let mut big = DMatrix::<f64>::zeros(gens.len() * d * d, d * d);
    for (k, &s) in gens.iter().enumerate() {
        let r = &rep.matrices[s];
        // vec(ρM − Mρ) = (I ⊗ ρ − ρᵀ ⊗ I) vec(M), column-major.
        let block = id.kronecker(r) - r.transpose().kronecker(&id);
        big.view_mut((k * d * d, 0), (d * d, d * d)).copy_from(&block);
    }
    let sv = big.svd(false, false).singular_values;
    let rank = sv.iter().filter(|&&s| s > rep.tol).count();
    d * d - rank
}

/// Matrices as text: one element per block, rows of 17-significant-digit
/// decimals.
pub fn dump_matrices(rep: &RealRep) -> String {
    let mut out = String::new();
    for (x, m) in rep.matrices.iter().enumerate() {
        out.push_str(&format!("element {x}\n"));
        for r in 0..rep.dim {
            let row: Vec<String> = (0..rep.dim).map(|c| format!("{:.16e}", m[(r, c)])).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}
