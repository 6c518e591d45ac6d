//! Suites that run across every shipped braiding: factorisation of braided
//! factorials, Hilbert series, and the Hopf and quotient identities.

use super::{built, guarded, holds, Built, SuiteConfig};
use crate::braiding::{flip, default_labels, BraidedSpace, Sign};
use crate::finite_group::GroupCalculus;
use crate::linalg::SparseVec;
use crate::nichols::NicholsAlgebra;
use crate::qplane::{anyonic_line, fermionic_plane, plane_braiding, PlaneCalculus};
use crate::qsl2::Sl2Calculus;
use crate::report::Check;
use crate::scalars::FieldCtx;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::sync::Arc;

/// Every shipped braiding by name.
fn braidings(cfg: &SuiteConfig) -> Built<Vec<(&'static str, BraidedSpace)>> {
    let k = cfg.field_or(FieldCtx::RatFun);
    let s3 = built(GroupCalculus::s3())?;
    let sl2 = built(Sl2Calculus::new(&k))?;
    let anyonic = built(anyonic_line(2))?;
    Ok(vec![
        ("s3", s3.lambda().space().clone()),
        ("sl2", sl2.calculus().space().clone()),
        ("plane_plus", built(plane_braiding(&k, &["x", "y"], &k.one()))?),
        ("plane_minus", built(plane_braiding(&k, &["x", "y"], &built(k.q_pow(-2))?))?),
        ("anyonic", anyonic.primal().space().clone()),
    ])
}

pub(super) fn braided_factorials(cfg: &SuiteConfig) -> Built<Vec<Check>> {
    let top = cfg.max_degree.min(5);
    let mut out = Vec::new();
    for (name, b) in braidings(cfg)? {
        for n in 2..=top {
            for (sign, tag) in [(Sign::Plus, "plus"), (Sign::Minus, "minus")] {
                out.push(holds(format!("factorisation_{name}_{tag}_n{n}"), b.verify_factorisation_all(n, sign)));
            }
        }
    }
    Ok(out)
}

pub(super) fn nichols_dims(cfg: &SuiteConfig) -> Built<Vec<Check>> {
    let k = cfg.field_or(FieldCtx::RatFun);
    let s3 = built(GroupCalculus::s3())?;
    let sl2 = built(Sl2Calculus::new(&k))?;
    let mut out = vec![
        Check::compare("s3_minus", &vec![1usize, 3, 4, 3, 1], &s3.lambda().dims()),
        Check::compare("sl2_minus", &vec![1usize, 4, 6, 4, 1], &sl2.forms().dims()),
    ];
    for d in 1..=4usize {
        let space = built(flip(default_labels(d), &k))?;
        let minus = built(NicholsAlgebra::build(space.clone(), Sign::Minus, d + 1))?;
        let binom: Vec<usize> = (0..=d).map(|m| binomial(d, m)).collect();
        out.push(Check::compare(format!("flip_minus_dim{d}"), &binom, &minus.dims()));
        let cap = cfg.max_degree.min(4);
        let plus = built(NicholsAlgebra::build(space, Sign::Plus, cap))?;
        let sym: Vec<usize> = (0..=cap).map(|m| binomial(d + m - 1, m)).collect();
        out.push(Check::compare(format!("flip_plus_dim{d}"), &sym, &plus.dims()));
    }
    Ok(out)
}

fn binomial(n: usize, r: usize) -> usize {
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Every shipped Nichols algebra by name.
fn algebras(cfg: &SuiteConfig) -> Built<Vec<(&'static str, Arc<NicholsAlgebra>)>> {
    let k = cfg.field_or(FieldCtx::RatFun);
    let s3 = built(GroupCalculus::s3())?;
    let sl2 = built(Sl2Calculus::new(&k))?;
    let plane = built(PlaneCalculus::quantum_plane(&k, 4))?;
    Ok(vec![
        ("s3", s3.lambda().clone()),
        ("sl2", sl2.forms().clone()),
        ("plane_forms", Arc::new(plane.forms().clone())),
        ("plane_coords", Arc::new(plane.coords().clone())),
        ("fermionic", built(fermionic_plane(&k))?.primal().clone()),
        ("anyonic", built(anyonic_line(2))?.primal().clone()),
    ])
}

/// Perturbs the representative `e_left` of degree `r` by a combination of
/// relations and multiplies by `e_right` of degree `s` in the tensor algebra.
/// The class in degree `r + s` must not move.
pub fn quotient_well_defined(
    alg: &NicholsAlgebra,
    r: usize,
    s: usize,
    left: usize,
    right: usize,
    coeffs: &[i64],
) -> Result<bool, String> {
    let k = alg.ctx().clone();
    let rel = alg.relations(r);
    let pert = rel
        .basis()
        .iter()
        .zip(coeffs.iter().cycle())
        .fold(SparseVec::new(), |acc, (v, &c)| acc.add(&v.scale(&k.int(c))));
    let base = SparseVec::unit(left, &k);
    let moved = base.add(&pert);
    let shift = alg.space().power_dim(s);
    let times = |v: &SparseVec| v.map_indices(|i| i * shift + right);
    let same_class = built(alg.project(r, &moved))? == built(alg.project(r, &base))?;
    let product = built(alg.project(r + s, &times(&moved)))? == built(alg.project(r + s, &times(&base)))?;
    Ok(same_class && product)
}

/// `K_r ⊗ V ⊆ K_{r+1}` and `V ⊗ K_r ⊆ K_{r+1}` on basis vectors.
fn ideal_closed(alg: &NicholsAlgebra) -> bool {
    let d = alg.space().dim();
    (1..alg.built_degree()).all(|r| {
        let (rel, big) = (alg.relations(r), alg.relations(r + 1));
        let width = alg.space().power_dim(r);
        rel.basis().iter().all(|v| {
            (0..d).all(|w| big.contains(&v.map_indices(|i| i * d + w)) && big.contains(&v.map_indices(|i| w * width + i)))
        })
    })
}

pub(super) fn fourier_identities(cfg: &SuiteConfig) -> Built<Vec<Check>> {
    let mut out = Vec::new();
    let algs = algebras(cfg)?;
    for (name, alg) in &algs {
        out.push(guarded(&format!("antipode_axiom_{name}"), || Ok(holds(format!("antipode_axiom_{name}"), built(alg.verify_antipode_axiom())?))));
        out.push(holds(format!("ideal_closed_{name}"), ideal_closed(alg)));
    }

    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut ok = true;
    let mut tried = 0;
    while tried < 50 {
        let (_, alg) = &algs[rng.gen_range(0..algs.len())];
        let n = alg.built_degree();
        if n < 3 {
            continue;
        }
        let r = rng.gen_range(2..n);
        let s = rng.gen_range(1..=n - r);
        if alg.relations(r).dim() == 0 {
            continue;
        }
        let left = rng.gen_range(0..alg.space().power_dim(r));
        let right = rng.gen_range(0..alg.space().power_dim(s));
        let coeffs: Vec<i64> = (0..4).map(|_| rng.gen_range(-3..=3)).collect();
        ok &= quotient_well_defined(alg, r, s, left, right, &coeffs)?;
        tried += 1;
    }
    out.push(holds("quotient_random_perturbations", ok));

    let k = cfg.field_or(FieldCtx::RatFun);
    let s3 = built(GroupCalculus::s3())?;
    let sl2 = built(Sl2Calculus::new(&k))?;
    out.push(holds("coevaluation_s3", s3.hodge().fourier().verify_coevaluation()));
    out.push(holds("coevaluation_sl2", sl2.hodge().fourier().verify_coevaluation()));
    out.push(holds("coevaluation_fermionic", built(fermionic_plane(&k))?.verify_coevaluation()));
    out.push(holds("coevaluation_anyonic", built(anyonic_line(2))?.verify_coevaluation()));

    for (name, b) in braidings(cfg)? {
        out.push(holds(format!("braid_relation_{name}"), braid_relation(&b)?));
    }
    Ok(out)
}

/// `Ψ₁Ψ₂Ψ₁ = Ψ₂Ψ₁Ψ₂` on `V^{⊗3}`.
pub(super) fn braid_relation(b: &BraidedSpace) -> Built<bool> {
    let (p1, p2) = (built(b.lift(1, 3))?, built(b.lift(2, 3))?);
    let lhs = built(built(p1.compose(&p2))?.compose(&p1))?;
    let rhs = built(built(p2.compose(&p1))?.compose(&p2))?;
    Ok(lhs == rhs)
}
