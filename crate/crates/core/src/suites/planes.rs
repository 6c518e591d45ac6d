//! The quantum plane calculus, the fermionic plane and the anyonic line.

use super::{built, holds, Built, SuiteConfig};
use crate::linalg::SparseVec;
use crate::nichols::GradedElement;
use crate::qplane::{anyonic_line, fermionic_plane, PlaneCalculus, PlaneForm};
use crate::report::Check;
use crate::scalars::FieldCtx;

pub(super) fn qplane(cfg: &SuiteConfig) -> Built<Vec<Check>> {
    let c = cfg.field_or(FieldCtx::RatFun);
    let cap = cfg.max_degree.max(8);
    let p = built(PlaneCalculus::quantum_plane(&c, cap))?;
    let q = |e: i64| built(c.q_pow(e));
    let mul = |a: &PlaneForm, b: &PlaneForm| built(p.mul(a, b));
    let (x, y) = (p.coord(1, 0), p.coord(1, 1));
    let dx = p.form(1, SparseVec::unit(0, &c));
    let dy = p.form(1, SparseVec::unit(1, &c));
    let (xdx, ydx, xdy, ydy) = (mul(&x, &dx)?, mul(&y, &dx)?, mul(&x, &dy)?, mul(&y, &dy)?);
    let dxdy = mul(&dx, &dy)?;
    let mut out = vec![
        holds("cross_dx_x", mul(&dx, &x)? == xdx.scale(&q(2)?)),
        holds("cross_dx_y", mul(&dx, &y)? == ydx.scale(&q(1)?)),
        holds("cross_dy_x", mul(&dy, &x)? == xdy.scale(&q(1)?).add(&ydx.scale(&(&q(2)? - &c.one())))),
        holds("cross_dy_y", mul(&dy, &y)? == ydy.scale(&q(2)?)),
        holds("lambda_dx_dx", mul(&dx, &dx)?.is_zero()),
        holds("lambda_dy_dy", mul(&dy, &dy)?.is_zero()),
        holds("lambda_dy_dx", mul(&dy, &dx)? == dxdy.scale(&-q(-1)?)),
        holds("koszul_dual", p.koszul_dual_relations_hold()),
    ];

    let q2 = q(2)?;
    let mut first = true;
    let mut second = true;
    let mut commute = true;
    for total in 1..=8usize {
        let parts = built(p.partials(total))?;
        for m in 0..=total {
            let n = total - m;
            let (idx, _) = built(p.monomial_index(m, n))?;
            let d1 = parts[0].apply(&SparseVec::unit(idx, &c));
            let d2 = parts[1].apply(&SparseVec::unit(idx, &c));
            let want1 = if m == 0 {
                SparseVec::new()
            } else {
                let (j, _) = built(p.monomial_index(m - 1, n))?;
                SparseVec::single(j, &c.q_int_base(m as u32, &q2) * &q(n as i64)?)
            };
            let want2 = if n == 0 {
                SparseVec::new()
            } else {
                let (j, _) = built(p.monomial_index(m, n - 1))?;
                SparseVec::single(j, c.q_int_base(n as u32, &q2))
            };
            first &= d1 == want1;
            second &= d2 == want2;
        }
        if total >= 2 {
            let lower = built(p.partials(total - 1))?;
            let d21 = built(lower[1].compose(&parts[0]))?;
            let d12 = built(lower[0].compose(&parts[1]))?;
            commute &= d21 == d12.scale(&q(1)?);
        }
    }
    out.push(holds("partial1_closed_form", first));
    out.push(holds("partial2_closed_form", second));
    out.push(holds("partials_q_commute", commute));

    let mut squared = true;
    for r in 0..=7usize {
        for k in 0..p.coords().dim(r) {
            squared &= built(p.d(&built(p.d(&p.coord(r, k)))?))?.is_zero();
        }
    }
    out.push(holds("d_squared", squared));
    let t = SparseVec::from_entries([(2, c.one()), (1, -q(1)?)]);
    out.push(holds("d_of_relation", built(p.d_tensor(2, &t))?.is_zero()));
    Ok(out)
}

pub(super) fn fermionic(cfg: &SuiteConfig) -> Built<Vec<Check>> {
    let k = cfg.field_or(FieldCtx::RatFun);
    let q = |e: i64| built(k.q_pow(e));
    let f = built(fermionic_plane(&k))?;
    let (p, d) = (f.primal().clone(), f.dual().clone());
    let word = |a: &crate::nichols::NicholsAlgebra, w: &[&str]| built(a.word(w));
    let (e1, e2, vol) = (word(&p, &["e_1"])?, word(&p, &["e_2"])?, word(&p, &["e_1", "e_2"])?);
    let (f1, f2, vol_star) = (word(&d, &["f^1"])?, word(&d, &["f^2"])?, word(&d, &["f^1", "f^2"])?);
    let one = GradedElement::one(&k);
    let mut out = vec![
        Check::compare("mu", &-q(1)?, f.mu()),
        holds("fourier_one", f.fourier(&one) == vol_star.scale(&-q(1)?)),
        holds("fourier_e1", f.fourier(&e1) == f2),
        holds("fourier_e2", f.fourier(&e2) == f1.scale(&-q(-1)?)),
        holds("fourier_vol", f.fourier(&vol) == one),
        holds("fourier_star_one", f.fourier_star(&one) == vol.scale(&-q(-1)?)),
        holds("fourier_star_f1", f.fourier_star(&f1) == e2.scale(&-q(2)?)),
        holds("fourier_star_f2", f.fourier_star(&f2) == e1.scale(&q(1)?)),
        holds("fourier_star_vol", f.fourier_star(&vol_star) == one),
        holds("antipode_vol", p.antipode(&vol) == vol.scale(&q(-2)?)),
        holds("antipode_vol_star", d.antipode(&vol_star) == vol_star.scale(&q(-2)?)),
        holds("dual_f2_f1", word(&d, &["f^2", "f^1"])? == vol_star.scale(&-q(1)?)),
        Check::compare("pairing_vol", &-q(-1)?, &f.duality().pairing(&vol_star, &vol)),
    ];
    let blocks = f.inverse_braided_exp();
    let ok = blocks.len() == 3
        && blocks[0].get(0, 0).is_one()
        && blocks[1].get(0, 0) == -k.one()
        && blocks[1].get(1, 1) == -q(2)?
        && blocks[1].get(0, 1).is_zero()
        && blocks[1].get(1, 0).is_zero()
        && blocks[2].get(0, 0) == -q(-1)?;
    out.push(holds("inverse_braided_exp", ok));
    out.extend(f.verify_star_after_fourier());
    let mut corr = Vec::new();
    for m in 0..=2i64 {
        corr.push(q(2 * m - 2)?);
    }
    out.extend(f.verify_fourier_after_star(|m| corr[m].clone()));
    out.push(holds("fourier_bijective", f.fourier_is_bijective()));
    Ok(out)
}

pub(super) fn anyonic(cfg: &SuiteConfig) -> Built<Vec<Check>> {
    if let Some(field) = &cfg.field {
        if *field != built(FieldCtx::cyclotomic(3))? {
            return Err(format!("the anyonic line with n = 2 lives over cyclotomic:3, not {field}"));
        }
    }
    let f = built(anyonic_line(2))?;
    let c = f.primal().ctx().clone();
    let qq = built(c.q())?;
    let inv_fact = |m: u32| built(c.q_factorial(m)).and_then(|x| built(x.inv()));
    let mut out = vec![Check::compare("mu", &inv_fact(2)?, f.mu())];
    for m in 0..=2usize {
        let x = GradedElement::homogeneous(&c, m, SparseVec::unit(0, &c));
        let want = GradedElement::homogeneous(&c, 2 - m, SparseVec::single(0, inv_fact(2 - m as u32)?));
        out.push(holds(format!("fourier_x{m}"), f.fourier(&x) == want));
        let k2 = ((2 - m) * (2 - m)) as i64;
        let want = GradedElement::homogeneous(&c, 2 - m, SparseVec::single(0, &built(qq.pow(k2))? * &inv_fact(2 - m as u32)?));
        out.push(holds(format!("fourier_star_y{m}"), f.fourier_star(&x) == want));
    }
    out.extend(f.verify_star_after_fourier());
    let corr: Vec<_> = (0..=2i64).map(|m| built(qq.pow(2 * m + 1))).collect::<Result<_, _>>()?;
    out.extend(f.verify_fourier_after_star(|m| corr[m].clone()));
    for n in 3..=4u32 {
        let g = built(anyonic_line(n))?;
        let pass = g.verify_star_after_fourier().iter().all(|x| x.pass) && g.fourier_is_bijective();
        out.push(holds(format!("fstar_f_n{n}"), pass));
    }
    Ok(out)
}
