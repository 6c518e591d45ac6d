//! The 3D calculus on `S₃`: Hodge star, spectra and Maxwell sources, and the
//! structure of `Ω`.

use super::{built, holds, Built, SuiteConfig};
use crate::finite_group::{GroupCalculus, GroupError};
use crate::linalg::LinMap;
use crate::nichols::{GradedElement, NicholsAlgebra};
use crate::report::Check;
use crate::scalars::FieldCtx;

fn build(cfg: &SuiteConfig) -> Built<GroupCalculus> {
    if let Some(f) = &cfg.field {
        if *f != FieldCtx::Rational {
            return Err(format!("the S₃ calculus is defined over rational, not {f}"));
        }
    }
    built(GroupCalculus::s3())
}

fn w(alg: &NicholsAlgebra, letters: &str) -> Built<GradedElement> {
    let labels: Vec<String> = letters.chars().map(|c| format!("e_{c}")).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    built(alg.word(&refs))
}

/// `Σ c x ⊗ y` with rows indexed by the left leg.
fn block(alg: &NicholsAlgebra, m: usize, terms: &[(i64, &str, &str)]) -> Built<LinMap> {
    let k = alg.ctx().clone();
    let n = alg.dim(m);
    let mut rows = vec![vec![k.zero(); n]; n];
    for &(c, x, y) in terms {
        let (x, y) = (w(alg, x)?.component(m), w(alg, y)?.component(m));
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                rows[i][j] += &(&k.int(c) * &(a * b));
            }
        }
    }
    Ok(LinMap::from_rows(&k, &rows))
}

pub(super) fn hodge(cfg: &SuiteConfig) -> Built<Vec<Check>> {
    let c = build(cfg)?;
    let h = c.hodge();
    let alg = c.lambda();
    let g = c.group();
    let k = c.ctx().clone();
    let one = GradedElement::one(&k);
    let vol = w(alg, "uvuw")?;
    let mut out = vec![
        Check::compare("mu", &-k.one(), h.mu()),
        holds("sharp_one", h.hodge(&one) == vol.neg()),
        holds("sharp_vol", h.hodge(&vol) == one),
    ];
    for (x, y) in [("u", "wuv"), ("v", "uvw"), ("w", "vwu")] {
        out.push(holds(format!("sharp_e{x}"), h.hodge(&w(alg, x)?) == w(alg, y)?));
        out.push(holds(format!("sharp_e{y}"), h.hodge(&w(alg, y)?) == w(alg, x)?.neg()));
    }
    for a in ["u", "v", "w"] {
        for b in ["u", "v", "w"] {
            if a == b {
                continue;
            }
            let (ia, ib) = (built(g.index_of(a))?, built(g.index_of(b))?);
            let aba = g.name(g.conj(ia, ib)).to_string();
            let pass = h.hodge(&w(alg, &format!("{a}{b}"))?) == w(alg, &format!("{aba}{a}"))?;
            out.push(holds(format!("sharp_e{a}e{b}"), pass));
        }
    }
    let id = |m: usize| LinMap::identity(alg.dim(m), &k);
    let s2 = h.hodge_map(2);
    let sq = built(s2.compose(s2))?;
    let cube = built(sq.compose(s2))?;
    out.push(holds("hodge_order_6", cube == id(2) && sq != id(2) && *s2 != id(2)));
    for m in [0, 1, 3, 4] {
        let sq = built(h.hodge_map(4 - m).compose(h.hodge_map(m)))?;
        out.push(Check::compare(format!("sharp_squared_deg{m}"), &id(m).scale(&-k.one()), &sq));
        out.push(Check::compare(format!("sharp_star_deg{m}"), h.hodge_map(m), h.hodge_star_star_map(m)));
    }
    out.push(Check::compare("sharp_star_deg2", &id(2), h.hodge_star_star_map(2)));

    let exp = h.fourier().exp();
    let blocks = [
        (0, id(0)),
        (1, id(1)),
        (2, block(alg, 2, &[(1, "vw", "wv"), (1, "uw", "wu"), (-1, "uv", "uw"), (-1, "vu", "vw")])?),
        (3, block(alg, 3, &[(1, "uvw", "uvw"), (1, "vwu", "vwu"), (1, "wuv", "wuv")])?),
        (4, block(alg, 4, &[(-1, "uvuw", "uvuw")])?),
    ];
    for (m, b) in blocks {
        match exp.block(m) {
            Some(x) => out.push(Check::compare(format!("exp_deg{m}"), &b, x)),
            None => out.push(Check::error(format!("exp_deg{m}"), "missing block")),
        }
    }
    out.push(holds("coevaluation", h.fourier().verify_coevaluation()));
    out.extend(built(h.verify_star_identities())?);
    out.extend(built(h.verify_interior_identities())?);
    Ok(out)
}

pub(super) fn maxwell(cfg: &SuiteConfig) -> Built<Vec<Check>> {
    let c = build(cfg)?;
    let k = c.ctx().clone();
    let cx = c.omega_complex();
    let lap0 = c.function_laplacian();
    let mut out = vec![
        Check::compare("laplacian0_partials", &c.partial_sum().scale(&k.int(-2)), &lap0),
        Check::compare("laplacian0_spectrum", &vec![1usize, 4, 1], &built(GroupCalculus::spectrum(&lap0, &[0, 6, 12]))?),
    ];
    let (sub, lap1) = built(c.coexact_laplacian())?;
    out.push(Check::compare("coexact_dim", &12usize, &sub.dim()));
    out.push(Check::compare("coexact_spectrum", &vec![4usize, 4, 4], &built(GroupCalculus::spectrum(&lap1, &[3, 6, 9]))?));

    let n = c.group().order();
    let constant = |coeffs: [i64; 3]| c.one_form(&coeffs.iter().map(|&x| vec![k.int(x); n]).collect::<Vec<_>>());
    let j = constant([1, -1, 0]);
    out.push(holds("eigen_eu_minus_ev", cx.laplacian(&j) == j.scale(&k.int(3))));
    let sol = built(c.maxwell(&j))?;
    out.push(holds("maxwell_eu_minus_ev", sol.residual_zero && sol.alpha == j.scale(&k.ratio(1, 3))));
    for x in 0..n {
        let jx = c.point_source(x);
        let name = c.group().name(x).to_string();
        out.push(holds(format!("eigen_point_source_{name}"), cx.laplacian(&jx) == jx.scale(&k.int(6))));
        let sol = built(c.maxwell(&jx))?;
        out.push(holds(format!("maxwell_point_source_{name}"), sol.residual_zero && sol.alpha == jx.scale(&k.ratio(1, 6))));
    }
    let theta = constant([1, 1, 1]);
    let refused = c.maxwell(&theta) == Err(GroupError::NotCoexact("integral pairing nonzero".into()));
    out.push(holds("maxwell_theta_refused", refused));
    out.push(holds("maxwell_zero_source", built(c.maxwell(&GradedElement::zero(&k)))?.alpha.is_zero()));
    for m in 0..4 {
        let lhs = built(cx.laplacian_map(m + 1).compose(&cx.d_map(m)))?;
        let rhs = built(cx.d_map(m).compose(&cx.laplacian_map(m)))?;
        out.push(Check::compare(format!("laplacian_commutes_d_deg{m}"), &rhs, &lhs));
    }
    Ok(out)
}

pub(super) fn structure(cfg: &SuiteConfig) -> Built<Vec<Check>> {
    let c = build(cfg)?;
    let alg = c.lambda();
    let omega = c.omega_dims();
    let mut out = vec![
        Check::compare("lambda_dims", &vec![1usize, 3, 4, 3, 1], &alg.dims()),
        Check::compare("omega_dims", &vec![6usize, 18, 24, 18, 6], &omega),
        Check::compare("omega_total_dim", &72usize, &omega.iter().sum::<usize>()),
        Check::compare("betti_numbers", &vec![1usize, 1, 0, 1, 1], &built(c.omega_complex().betti_numbers())?),
        holds("relation_uu", w(alg, "uu")?.is_zero()),
        holds("relation_wv", w(alg, "wv")? == w(alg, "uw")?.add(&w(alg, "vu")?).neg()),
    ];
    out.extend(built(c.structure_checks())?);
    Ok(out)
}
