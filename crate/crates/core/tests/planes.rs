use nq_core::linalg::SparseVec;
use nq_core::nichols::GradedElement;
use nq_core::qplane::{anyonic_line, fermionic_plane, PlaneCalculus, PlaneForm};
use nq_core::scalars::{FieldCtx, Scalar};

fn k() -> FieldCtx {
    FieldCtx::RatFun
}

fn q(n: i64) -> Scalar {
    k().q_pow(n).unwrap()
}

#[test]
fn fermionic_fourier_tables() {
    let f = fermionic_plane(&k()).unwrap();
    let (p, d) = (f.primal().clone(), f.dual().clone());
    let e1 = p.word(&["e_1"]).unwrap();
    let e2 = p.word(&["e_2"]).unwrap();
    let vol = p.word(&["e_1", "e_2"]).unwrap();
    let f1 = d.word(&["f^1"]).unwrap();
    let f2 = d.word(&["f^2"]).unwrap();
    let vol_star = d.word(&["f^1", "f^2"]).unwrap();
    let one = GradedElement::one(&k());

    assert_eq!(f.mu(), &-q(1));
    assert_eq!(f.fourier(&one), vol_star.scale(&-q(1)));
    assert_eq!(f.fourier(&e1), f2);
    assert_eq!(f.fourier(&e2), f1.scale(&-q(-1)));
    assert_eq!(f.fourier(&vol), one);

    assert_eq!(f.fourier_star(&one), vol.scale(&-q(-1)));
    assert_eq!(f.fourier_star(&f1), e2.scale(&-q(2)));
    assert_eq!(f.fourier_star(&f2), e1.scale(&q(1)));
    assert_eq!(f.fourier_star(&vol_star), one);
}

#[test]
fn fermionic_structure() {
    let f = fermionic_plane(&k()).unwrap();
    let (p, d) = (f.primal().clone(), f.dual().clone());
    let vol = p.word(&["e_1", "e_2"]).unwrap();
    let vol_star = d.word(&["f^1", "f^2"]).unwrap();
    assert_eq!(p.antipode(&vol), vol.scale(&q(-2)));
    assert_eq!(d.antipode(&vol_star), vol_star.scale(&q(-2)));
    assert_eq!(d.word(&["f^2", "f^1"]).unwrap(), vol_star.scale(&-q(1)));
    assert_eq!(f.duality().pairing(&vol_star, &vol), -q(-1));

    // Ψ_sup^{-1} exp = 1⊗1 - f^1⊗e_1 - q² f^2⊗e_2 - q^{-1} Vol*⊗Vol.
    let blocks = f.inverse_braided_exp();
    assert!(blocks[0].get(0, 0).is_one());
    assert_eq!(blocks[1].get(0, 0), -k().one());
    assert_eq!(blocks[1].get(1, 1), -q(2));
    assert!(blocks[1].get(0, 1).is_zero() && blocks[1].get(1, 0).is_zero());
    assert_eq!(blocks[2].get(0, 0), -q(-1));

    assert!(f.verify_star_after_fourier().iter().all(|c| c.pass));
    assert!(f.verify_fourier_after_star(|m| q(2 * m as i64 - 2)).iter().all(|c| c.pass));
    assert!(f.fourier_is_bijective());
    assert!(f.verify_coevaluation());
}

#[test]
fn anyonic_line_tables() {
    let f = anyonic_line(2).unwrap();
    let c = f.primal().ctx().clone();
    let qq = c.q().unwrap();
    let fact = |m: u32| c.q_factorial(m).unwrap();
    assert_eq!(f.mu(), &fact(2).inv().unwrap());
    for m in 0..=2usize {
        let x = GradedElement::homogeneous(&c, m, SparseVec::unit(0, &c));
        let expect = GradedElement::homogeneous(&c, 2 - m, SparseVec::single(0, fact(2 - m as u32).inv().unwrap()));
        assert_eq!(f.fourier(&x), expect, "F(x^{m})");
        let k2 = ((2 - m) * (2 - m)) as i64;
        let expect_star = GradedElement::homogeneous(
            &c,
            2 - m,
            SparseVec::single(0, &qq.pow(k2).unwrap() * &fact(2 - m as u32).inv().unwrap()),
        );
        assert_eq!(f.fourier_star(&x), expect_star, "F*(y^{m})");
    }
    assert!(f.verify_star_after_fourier().iter().all(|c| c.pass));
    let qc = qq.clone();
    assert!(f.verify_fourier_after_star(|m| qc.pow(2 * m as i64 + 1).unwrap()).iter().all(|c| c.pass));
}

fn plane() -> PlaneCalculus {
    PlaneCalculus::quantum_plane(&k(), 8).unwrap()
}

#[test]
fn quantum_plane_cross_relations() {
    let p = plane();
    let c = k();
    let x = p.coord(1, 0);
    let y = p.coord(1, 1);
    let dx = p.form(1, SparseVec::unit(0, &c));
    let dy = p.form(1, SparseVec::unit(1, &c));
    let xdx = p.mul(&x, &dx).unwrap();
    let ydx = p.mul(&y, &dx).unwrap();
    let xdy = p.mul(&x, &dy).unwrap();
    let ydy = p.mul(&y, &dy).unwrap();
    assert_eq!(p.mul(&dx, &x).unwrap(), xdx.scale(&q(2)));
    assert_eq!(p.mul(&dx, &y).unwrap(), ydx.scale(&q(1)));
    assert_eq!(p.mul(&dy, &x).unwrap(), xdy.scale(&q(1)).add(&ydx.scale(&(&q(2) - &c.one()))));
    assert_eq!(p.mul(&dy, &y).unwrap(), ydy.scale(&q(2)));

    // Λ relations: dx² = dy² = 0, dy dx = -q^{-1} dx dy.
    assert!(p.mul(&dx, &dx).unwrap().is_zero());
    assert!(p.mul(&dy, &dy).unwrap().is_zero());
    let dxdy = p.mul(&dx, &dy).unwrap();
    assert_eq!(p.mul(&dy, &dx).unwrap(), dxdy.scale(&-q(-1)));
    assert!(p.koszul_dual_relations_hold());
}

#[test]
fn quantum_plane_differential() {
    let p = plane();
    let c = k();
    // d(y⊗x - q x⊗y) = 0 before passing to the quotient.
    let t = SparseVec::from_entries([(2, c.one()), (1, -q(1))]);
    assert!(p.d_tensor(2, &t).unwrap().is_zero());
    assert!(p.d(&PlaneForm::homogeneous(0, 0, SparseVec::unit(0, &c))).unwrap().is_zero());
    for r in 0..=7usize {
        for kk in 0..p.coords().dim(r) {
            let b = p.coord(r, kk);
            assert!(p.d(&p.d(&b).unwrap()).unwrap().is_zero(), "d² on degree {r}");
        }
    }
    // Leibniz on functions.
    for r in 1..=3usize {
        for s in 1..=3usize {
            for i in 0..p.coords().dim(r) {
                for j in 0..p.coords().dim(s) {
                    let (a, b) = (p.coord(r, i), p.coord(s, j));
                    let lhs = p.d(&p.mul(&a, &b).unwrap()).unwrap();
                    let rhs = p.mul(&p.d(&a).unwrap(), &b).unwrap().add(&p.mul(&a, &p.d(&b).unwrap()).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn wess_zumino_partials() {
    let p = plane();
    let c = k();
    let q2 = q(2);
    for total in 1..=8usize {
        let parts = p.partials(total).unwrap();
        for m in 0..=total {
            let n = total - m;
            let (idx, coeff) = p.monomial_index(m, n).unwrap();
            assert!(coeff.is_one());
            let d1 = parts[0].apply(&SparseVec::unit(idx, &c));
            let d2 = parts[1].apply(&SparseVec::unit(idx, &c));
            let expect1 = if m == 0 {
                SparseVec::new()
            } else {
                let (j, _) = p.monomial_index(m - 1, n).unwrap();
                SparseVec::single(j, &c.q_int_base(m as u32, &q2) * &q(n as i64))
            };
            let expect2 = if n == 0 {
                SparseVec::new()
            } else {
                let (j, _) = p.monomial_index(m, n - 1).unwrap();
                SparseVec::single(j, c.q_int_base(n as u32, &q2))
            };
            assert_eq!(d1, expect1, "∂¹ x^{m}y^{n}");
            assert_eq!(d2, expect2, "∂² x^{m}y^{n}");
        }
        if total >= 2 {
            let lower = p.partials(total - 1).unwrap();
            let d21 = lower[1].compose(&parts[0]).unwrap();
            let d12 = lower[0].compose(&parts[1]).unwrap();
            assert_eq!(d21, d12.scale(&q(1)));
        }
    }
}
