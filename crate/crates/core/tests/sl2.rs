use nq_core::hodge::FormAlgebra;
use nq_core::linalg::{LinMap, SparseVec, Subspace};
use nq_core::nichols::GradedElement;
use nq_core::qsl2::{
    BLieAlgebra, FormModule, MonoPoly, Monomial3, MonomialCalculus, RMatrix, RescaledBasis, Sl2Calculus, Sl2Word,
};
use nq_core::scalars::{FieldCtx, Scalar};
use std::sync::OnceLock;

fn k() -> FieldCtx {
    FieldCtx::RatFun
}

fn calc() -> &'static Sl2Calculus {
    static C: OnceLock<Sl2Calculus> = OnceLock::new();
    C.get_or_init(|| Sl2Calculus::new(&k()).unwrap())
}

fn q(e: i64) -> Scalar {
    k().q_pow(e).unwrap()
}

fn lam() -> Scalar {
    k().lambda().unwrap()
}

fn int(n: i64) -> Scalar {
    k().int(n)
}

fn qi(n: i64) -> Scalar {
    k().sym_int(n).unwrap()
}

fn mul(xs: &[&Scalar]) -> Scalar {
    xs.iter().fold(k().one(), |acc, x| &acc * *x)
}

fn tens(terms: &[(Scalar, &str)]) -> SparseVec {
    let s = calc();
    terms.iter().fold(SparseVec::new(), |acc, (c, w)| acc.add(&s.tensor(w).scale(c)))
}

fn form(terms: &[(Scalar, &str)]) -> GradedElement {
    let s = calc();
    terms.iter().fold(GradedElement::zero(&k()), |acc, (c, w)| acc.add(&s.form(w).scale(c)))
}

fn f1(w: &str) -> GradedElement {
    form(&[(k().one(), w)])
}

#[test]
fn braiding_on_generators() {
    let s = calc();
    let psi = s.calculus().space().psi();
    let l = lam();
    let one = k().one();
    let cases: Vec<(&str, SparseVec)> = vec![
        ("aa", tens(&[(one.clone(), "aa")])),
        ("ab", tens(&[(q(2), "ba")])),
        ("ac", tens(&[(q(-2), "ca")])),
        ("ad", tens(&[(one.clone(), "da")])),
        ("ba", tens(&[(one.clone(), "ab"), (-mul(&[&l, &q(2)]), "ba")])),
        ("bb", tens(&[(one.clone(), "bb")])),
        ("bc", tens(&[(one.clone(), "cb"), (mul(&[&l, &q(2)]), "za")])),
        ("bd", tens(&[(one.clone(), "db"), (mul(&[&l, &q(2)]), "ba")])),
        ("ca", tens(&[(one.clone(), "ac"), (l.clone(), "ca")])),
        ("cb", tens(&[(one.clone(), "bc"), (-mul(&[&l, &q(2)]), "za")])),
        ("cc", tens(&[(one.clone(), "cc")])),
        ("cd", tens(&[(one.clone(), "dc"), (-l.clone(), "ca")])),
        (
            "da",
            tens(&[(one.clone(), "ad"), (mul(&[&l, &l, &q(2)]), "za"), (-l.clone(), "bc"), (l.clone(), "cb")]),
        ),
        ("db", tens(&[(q(-2), "bd"), (-l.clone(), "zb")])),
        (
            "dd",
            tens(&[(one.clone(), "dd"), (l.clone(), "bc"), (-l.clone(), "cb"), (-mul(&[&l, &l, &q(2)]), "za")]),
        ),
    ];
    for (x, want) in cases {
        assert_eq!(psi.apply(&s.tensor(x)), want, "braiding of {x}");
    }
}

#[test]
fn braiding_of_d_and_c() {
    // As printed: q²λ e_z⊗e_c + (q⁴-1+q⁻²) e_c⊗e_d + λ(q⁴-1) e_c⊗e_z.
    let s = calc();
    let psi = s.calculus().space().psi();
    let l = lam();
    let printed = tens(&[
        (mul(&[&q(2), &l]), "zc"),
        (&(&q(4) - &k().one()) + &q(-2), "cd"),
        (mul(&[&l, &(&q(4) - &k().one())]), "cz"),
    ]);
    assert_eq!(psi.apply(&s.tensor("dc")), printed);
}

#[test]
fn theta_is_braided_trivially() {
    let s = calc();
    let psi = s.calculus().space().psi();
    for x in ["a", "b", "c", "d"] {
        let xt = tens(&[(k().one(), &format!("{x}a")), (k().one(), &format!("{x}d"))]);
        let tx = tens(&[(k().one(), &format!("a{x}")), (k().one(), &format!("d{x}"))]);
        assert_eq!(psi.apply(&xt), tx);
    }
    assert!(f1("tt").is_zero());
}

#[test]
fn exterior_relations() {
    let s = calc();
    assert_eq!(s.forms().dims(), vec![1, 4, 6, 4, 1]);
    assert_eq!(s.forms().basis_labels(2), vec!["e_ae_b", "e_ae_c", "e_ae_d", "e_be_c", "e_be_d", "e_ce_d"]);
    let l = lam();
    let one = k().one();
    for x in ["aa", "bb", "cc"] {
        assert!(f1(x).is_zero(), "{x}");
    }
    for (x, y) in [("ab", "ba"), ("ac", "ca"), ("bc", "cb")] {
        assert_eq!(f1(x), f1(y).neg(), "{x}");
    }
    assert!(form(&[(one.clone(), "ad"), (one.clone(), "da"), (l.clone(), "cb")]).is_zero());
    assert!(form(&[(one.clone(), "dc"), (q(2), "cd"), (l.clone(), "ac")]).is_zero());
    assert!(form(&[(one.clone(), "bd"), (q(2), "db"), (l.clone(), "ba")]).is_zero());
    assert_eq!(f1("dd"), form(&[(l.clone(), "cb")]));
    // the same in terms of e_z
    assert!(form(&[(one.clone(), "bz"), (q(2), "zb")]).is_zero());
    assert!(form(&[(one.clone(), "zc"), (q(2), "cz")]).is_zero());
    assert_eq!(form(&[(one.clone(), "za"), (one.clone(), "az")]), form(&[(l.clone(), "cb")]));
    assert_eq!(f1("zz"), form(&[(&one - &q(-4), "cb")]));
}

#[test]
fn exterior_derivative_on_generators() {
    let s = calc();
    let h = s.hodge();
    let l = lam();
    assert_eq!(h.d(&f1("a")).unwrap(), form(&[(l.clone(), "bc")]));
    assert_eq!(h.d(&f1("b")).unwrap(), form(&[(mul(&[&l, &q(2)]), "zb")]));
    assert_eq!(h.d(&f1("c")).unwrap(), form(&[(mul(&[&l, &q(2)]), "cz")]));
    assert_eq!(h.d(&f1("d")).unwrap(), form(&[(l.clone(), "cb")]));
    assert_eq!(h.d(&f1("z")).unwrap(), form(&[(&k().one() - &q(-4), "bc")]));
}

fn gen(i: usize, j: usize) -> Sl2Word {
    calc().coords().generator(i, j)
}

fn one_form(x: &str, coeff: Sl2Word) -> FormModule {
    let s = calc();
    s.left_mul(&coeff, &s.constant(1, &s.tensor(x)))
}

fn commutator(x: &str, f: &Sl2Word, twist: &Scalar) -> FormModule {
    // e_x f - twist · f e_x
    let s = calc();
    let ex = s.constant(1, &s.tensor(x));
    s.right_mul(&ex, f).sub(&s.left_mul(&f.scale(twist), &ex))
}

#[test]
fn bimodule_relations() {
    let one = k().one();
    let l = lam();
    let ql = mul(&[&q(1), &l]);
    let zero = FormModule::zero(1);
    // e_a t = (qa, q⁻¹b; qc, q⁻¹d) e_a
    for (i, j, e) in [(0, 0, 1), (0, 1, -1), (1, 0, 1), (1, 1, -1)] {
        assert_eq!(commutator("a", &gen(i, j), &q(e)), zero, "e_a with t{i}{j}");
    }
    // [e_b, x] = qλ (0, a; 0, c) e_a
    assert_eq!(commutator("b", &gen(0, 0), &one), zero);
    assert_eq!(commutator("b", &gen(0, 1), &one), one_form("a", gen(0, 0).scale(&ql)));
    assert_eq!(commutator("b", &gen(1, 0), &one), zero);
    assert_eq!(commutator("b", &gen(1, 1), &one), one_form("a", gen(1, 0).scale(&ql)));
    // [e_c, x] = qλ (b, 0; d, 0) e_a
    assert_eq!(commutator("c", &gen(0, 0), &one), one_form("a", gen(0, 1).scale(&ql)));
    assert_eq!(commutator("c", &gen(0, 1), &one), zero);
    assert_eq!(commutator("c", &gen(1, 0), &one), one_form("a", gen(1, 1).scale(&ql)));
    assert_eq!(commutator("c", &gen(1, 1), &one), zero);
    // e_d (a; c) - q⁻¹(a; c) e_d = λ (b; d) e_b
    assert_eq!(commutator("d", &gen(0, 0), &q(-1)), one_form("b", gen(0, 1).scale(&l)));
    assert_eq!(commutator("d", &gen(1, 0), &q(-1)), one_form("b", gen(1, 1).scale(&l)));
    // [e_d, (b; d)]_q = λ (a; c) e_c + qλ² (b; d) e_a
    let l2q = mul(&[&l, &l, &q(1)]);
    for (i, (x, y)) in [((0, 1), (0, 0)), ((1, 1), (1, 0))].into_iter().enumerate() {
        let want = one_form("c", gen(y.0, y.1).scale(&l)).add(&one_form("a", gen(x.0, x.1).scale(&l2q)));
        assert_eq!(commutator("d", &gen(x.0, x.1), &q(1)), want, "row {i}");
    }
}

#[test]
fn exterior_derivative_of_coordinates() {
    let s = calc();
    let l = lam();
    let one = k().one();
    // d(a; c) = (a; c)((q-1)e_a + (q⁻¹-1)e_d) + λ(b; d)e_b
    for i in 0..2 {
        let f = gen(i, 0);
        let want = one_form("a", f.scale(&(&q(1) - &one)))
            .add(&one_form("d", f.scale(&(&q(-1) - &one))))
            .add(&one_form("b", gen(i, 1).scale(&l)));
        assert_eq!(s.d_function(&f), want);
    }
    // d t^a_b = t^a_c (R₂₁R)^c_b^α_β E_α^β - t^a_b θ
    let r = s.calculus().rmatrix();
    for a in 0..2 {
        for b in 0..2 {
            let mut want = one_form("a", gen(a, b).neg()).add(&one_form("d", gen(a, b).neg()));
            for c in 0..2 {
                for al in 0..2 {
                    for be in 0..2 {
                        let mut x = k().zero();
                        for p in 0..2 {
                            for y in 0..2 {
                                x += &(r.r(al, y, c, p) * r.r(p, b, y, be));
                            }
                        }
                        let label = ["a", "b", "c", "d"][al * 2 + be];
                        want = want.add(&one_form(label, gen(a, c).scale(&x)));
                    }
                }
            }
            assert_eq!(s.d_function(&gen(a, b)), want, "d t{a}{b}");
        }
    }
}

#[test]
fn monomial_derivative_matches_inner_calculus() {
    // Left-multiplying by d clears the d^{-1} terms of the printed formula.
    let s = calc();
    let co = s.coords();
    let mc = MonomialCalculus::new(&k(), 4).unwrap();
    let d = gen(1, 1);
    for x in MonomialCalculus::monomials(3) {
        let f = co.cbd(x.k as u32, x.n as u32, x.m as u32);
        let got = s.left_mul(&d, &s.d_function(&f));
        let mut want = FormModule::zero(1);
        for (i, part) in mc.d_monomial(x).iter().enumerate() {
            let mut w = Sl2Word::zero();
            for (y, c) in part.terms() {
                // d · c^K b^N d^M = q^{K+N} c^K b^N d^{M+1}
                let shift = q((y.k + y.n) as i64);
                w = w.add(&co.cbd(y.k as u32, y.n as u32, (y.m + 1) as u32).scale(&(c * &shift)));
            }
            want = want.add(&one_form(["a", "b", "c", "d"][i], w));
        }
        assert_eq!(got, want, "d({x})");
    }
}

#[test]
fn metric_values() {
    let s = calc();
    let g = s.metric();
    let up = LinMap::from_rows(
        &k(),
        &[
            vec![-mul(&[&lam(), &q(2)]), int(0), int(0), -q(2)],
            vec![int(0), int(0), q(2), int(0)],
            vec![int(0), int(1), int(0), int(0)],
            vec![-q(2), int(0), int(0), int(0)],
        ],
    );
    assert_eq!(Sl2Calculus::metric_tensor(&k()).unwrap(), up);
    let low = LinMap::from_rows(
        &k(),
        &[
            vec![int(0), int(0), int(0), -q(-2)],
            vec![int(0), int(0), int(1), int(0)],
            vec![int(0), q(-2), int(0), int(0)],
            vec![-q(-2), int(0), int(0), mul(&[&q(-2), &lam()])],
        ],
    );
    assert_eq!(g.pairing_matrix(), &low);
    let (ez, th) = (s.one_form('z'), s.one_form('t'));
    let zz = mul(&[&q(-3), &qi(2)]);
    assert_eq!(g.pair(&ez, &ez), zz);
    assert_eq!(g.pair(&th, &th), -zz);
    assert_eq!(g.pair(&s.one_form('b'), &s.one_form('c')), k().one());
    assert_eq!(g.pair(&s.one_form('c'), &s.one_form('b')), q(-2));
    assert!(g.wedge_vanishes(s.forms()).unwrap());
    assert!(g.is_quantum_symmetric(s.calculus().space()));
}

#[test]
fn metric_is_central_and_invariant() {
    let s = calc();
    let g = s.constant(2, &s.metric().tensor());
    for i in 0..2 {
        for j in 0..2 {
            let t = gen(i, j);
            assert_eq!(s.right_mul(&g, &t), s.left_mul(&t, &g), "g against t{i}{j}");
        }
    }
    assert_eq!(s.coaction(2, &s.metric().tensor()), g);
    let theta = s.calculus().theta();
    assert_eq!(s.coaction(1, &theta), s.constant(1, &theta));
}

#[test]
fn volume_is_central_and_invariant() {
    let s = calc();
    let alg = s.forms();
    let vol = alg.lift(4, &s.volume().component(4));
    let v = s.constant(4, &vol);
    for i in 0..2 {
        for j in 0..2 {
            let t = gen(i, j);
            let lhs = s.project(&s.right_mul(&v, &t)).unwrap();
            let rhs = s.project(&s.left_mul(&t, &v)).unwrap();
            assert_eq!(lhs, rhs, "Vol against t{i}{j}");
        }
    }
    let co = s.project(&s.coaction(4, &vol)).unwrap();
    assert_eq!(co, s.project(&v).unwrap());
}

#[test]
fn coaction_matrix_preserves_metric_block() {
    let s = calc();
    let co = s.coords();
    let (a, b, c, d) = (gen(0, 0), gen(0, 1), gen(1, 0), gen(1, 1));
    let two = qi(2);
    let m = vec![
        vec![co.mul(&a, &a), co.mul(&a, &b).scale(&two), co.mul(&b, &b)],
        vec![co.mul(&c, &a), co.one().add(&co.mul(&b, &c).scale(&two)), co.mul(&d, &b)],
        vec![co.mul(&c, &c), co.mul(&c, &d).scale(&two), co.mul(&d, &d)],
    ];
    let sc = |x: Scalar| co.scalar(x);
    let z = Sl2Word::zero();
    let mt: Vec<Vec<Sl2Word>> = (0..3).map(|r| (0..3).map(|c| m[c][r].clone()).collect()).collect();
    // the metric's coefficients on (-e_b, e_z, q⁻¹e_c)
    let gmat = vec![
        vec![z.clone(), z.clone(), sc(-q(3))],
        vec![z.clone(), sc(q(3).try_div(&two).unwrap()), z.clone()],
        vec![sc(-q(1)), z.clone(), z.clone()],
    ];
    assert_eq!(co.matmul(&co.matmul(&m, &gmat), &mt), gmat);
    // Δ_R v_i = Σ_j v_j ⊗ M_{ji} on (-e_b, e_z, q⁻¹e_c)
    let v = [s.one_form('b').neg(), s.one_form('z'), s.one_form('c').scale(&q(-1))];
    for (i, vi) in v.iter().enumerate() {
        let mut want = FormModule::zero(1);
        for (jx, vj) in v.iter().enumerate() {
            want = want.add(&s.left_mul(&m[jx][i], &s.constant(1, vj)));
        }
        assert_eq!(s.coaction(1, vi), want, "component {i}");
    }
}

/// `Σ c x ⊗ y` with rows indexed by the left leg.
fn block(m: usize, scale: &Scalar, terms: &[(Scalar, &str, &str)]) -> LinMap {
    let alg = calc().forms();
    let n = alg.dim(m);
    let mut rows = vec![vec![k().zero(); n]; n];
    for (c, x, y) in terms {
        let (x, y) = (f1(x).component(m), f1(y).component(m));
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                rows[i][j] += &mul(&[c, scale, a, b]);
            }
        }
    }
    LinMap::from_rows(&k(), &rows)
}

#[test]
fn exp_blocks() {
    let s = calc();
    let exp = s.hodge().fourier().exp();
    let l = lam();
    let one = k().one();
    let b1 = block(
        1,
        &one,
        &[(-mul(&[&l, &q(2)]), "a", "a"), (-q(2), "a", "d"), (q(2), "b", "c"), (one.clone(), "c", "b"), (-q(2), "d", "a")],
    );
    assert_eq!(exp.block(1).unwrap(), &b1);
    let b2 = block(
        2,
        &q(2),
        &[
            (mul(&[&l, &q(2)]), "ab", "ac"),
            (-q(2), "ab", "cd"),
            (l.clone(), "ac", "ab"),
            (-one.clone(), "ac", "bd"),
            (q(2), "ad", "ad"),
            (one.clone(), "bc", "bc"),
            (-q(2), "bd", "ac"),
            (-one.clone(), "cd", "ab"),
        ],
    );
    assert_eq!(exp.block(2).unwrap(), &b2);
    let b3 = block(
        3,
        &q(4),
        &[
            (-l.clone(), "abc", "abc"),
            (-one.clone(), "abc", "bcd"),
            (q(2), "abd", "acd"),
            (one.clone(), "acd", "abd"),
            (-one.clone(), "bcd", "abc"),
        ],
    );
    assert_eq!(exp.block(3).unwrap(), &b3);
    assert_eq!(exp.block(4).unwrap(), &block(4, &q(6), &[(one, "abcd", "abcd")]));
    assert_eq!(s.hodge().mu(), &q(6));
}

#[test]
fn hodge_table() {
    let s = calc();
    let h = s.hodge();
    let l = lam();
    let one = k().one();
    let vol = s.volume();
    assert_eq!(vol, &f1("abcd"));
    assert_eq!(h.hodge(&GradedElement::one(&k())), vol.scale(&q(6)));
    let table: Vec<(&str, GradedElement)> = vec![
        ("a", form(&[(-q(4), "abc")])),
        ("b", form(&[(-q(4), "abd")])),
        ("c", form(&[(q(6), "acd")])),
        ("d", form(&[(q(4), "bcd"), (mul(&[&l, &q(4)]), "abc")])),
        ("ab", form(&[(-q(2), "ab")])),
        ("ac", form(&[(q(4), "ac")])),
        ("ad", form(&[(q(2), "bc"), (mul(&[&l, &q(4)]), "ad")])),
        ("bc", form(&[(q(4), "ad")])),
        ("bd", form(&[(q(4), "bd"), (&one - &q(4), "ab")])),
        ("cd", form(&[(-q(2), "cd")])),
        ("abc", form(&[(-q(2), "a")])),
        ("abd", form(&[(-q(2), "b")])),
        ("acd", form(&[(one.clone(), "c")])),
        ("bcd", form(&[(q(2), "d"), (mul(&[&l, &q(2)]), "a")])),
        ("abcd", GradedElement::one(&k())),
    ];
    for (x, want) in table {
        assert_eq!(h.hodge(&f1(x)), want, "♯{x}");
    }
}

#[test]
fn hodge_square_and_hecke() {
    let s = calc();
    let h = s.hodge();
    for m in [0, 1, 3, 4] {
        let sq = h.hodge_map(4 - m).compose(h.hodge_map(m)).unwrap();
        assert_eq!(sq, LinMap::identity(h.algebra().dim(m), &k()).scale(&q(6)), "degree {m}");
    }
    let s2 = h.hodge_map(2);
    let a = s2.shifted(&q(4)).unwrap();
    let b = s2.shifted(&-q(2)).unwrap();
    assert!(a.compose(&b).unwrap().is_zero());
    let sp = s2.scale(&q(-3));
    let lhs = sp.compose(&sp).unwrap();
    let rhs = LinMap::identity(6, &k()).add(&sp.scale(&(&q(1) - &q(-1)))).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn antipode_and_star_star() {
    let s = calc();
    let h = s.hodge();
    let alg = s.forms();
    let l = lam();
    let one = k().one();
    let table: Vec<(&str, GradedElement)> = vec![
        ("ab", form(&[(q(2), "ab")])),
        ("ac", form(&[(q(-2), "ac")])),
        ("ad", form(&[(one.clone(), "ad"), (-l.clone(), "bc")])),
        ("bc", form(&[(one.clone(), "bc"), (mul(&[&l, &q(2)]), "da")])),
        ("bd", form(&[(mul(&[&l, &q(2)]), "ab"), (-one.clone(), "db")])),
        ("cd", form(&[(q(2), "cd")])),
    ];
    for (x, want) in table {
        assert_eq!(alg.antipode(&f1(x)), want, "S{x}");
    }
    for m in [0, 1, 3, 4] {
        let sign = if m % 2 == 0 { one.clone() } else { -one.clone() };
        assert_eq!(alg.antipode_map(m), LinMap::identity(alg.dim(m), &k()).scale(&sign));
        assert_eq!(h.hodge_star_star_map(m), h.hodge_map(m), "degree {m}");
    }
    for m in 0..=4 {
        let a = alg.antipode_map(4 - m).compose(h.hodge_map(m)).unwrap();
        let b = h.hodge_map(m).compose(&alg.antipode_map(m)).unwrap();
        assert_eq!(a, b, "[♯, S] on degree {m}");
    }
    let inv = h.hodge_map(2).inverse().unwrap();
    assert_eq!(h.hodge_star_star_map(2), &alg.antipode_map(2).compose(&inv).unwrap().scale(&q(6)));
}

#[test]
fn codifferential_and_theta() {
    let s = calc();
    let h = s.hodge();
    for x in ["a", "b", "c", "d"] {
        assert!(h.codifferential(&f1(x)).unwrap().is_zero(), "δe_{x}");
    }
    let sharp_theta = h.hodge(&f1("t"));
    assert_eq!(sharp_theta, form(&[(-q(4), "bcz")]));
    assert!(h.d(&sharp_theta).unwrap().is_zero());
    // ♯e_z = q⁻²♯e_a - ♯e_d from the ♯ table
    assert_eq!(h.hodge(&f1("z")), form(&[(-q(4), "bct")]));
    let alg = s.forms();
    for x in ["b", "c", "z"] {
        let y = h.hodge(&f1(x));
        assert!(alg.product(&f1("t"), &y).unwrap().is_zero(), "θ♯e_{x}");
        assert!(alg.product(&y, &f1("t")).unwrap().is_zero(), "♯e_{x}θ");
    }
    let ya = h.hodge(&f1("a"));
    assert_eq!(alg.product(&f1("t"), &ya).unwrap(), alg.product(&ya, &f1("t")).unwrap().neg());
}

#[test]
fn star_identities_hold() {
    let h = calc().hodge();
    for c in h.verify_star_identities().unwrap().into_iter().chain(h.verify_interior_identities().unwrap()) {
        assert!(c.pass, "{c:?}");
    }
}

fn blie() -> &'static BLieAlgebra {
    static B: OnceLock<BLieAlgebra> = OnceLock::new();
    B.get_or_init(|| BLieAlgebra::new(RMatrix::standard_sl2(&k()).unwrap()).unwrap())
}

#[test]
fn braided_lie_axioms() {
    let b = blie();
    assert!(b.verify_l2());
    assert!(b.braidings_satisfy_braid_relation());
}

#[test]
fn braided_lie_brackets() {
    let b = blie();
    let r = RescaledBasis::new(&k()).unwrap();
    let l = lam();
    let two = qi(2);
    assert_eq!(b.bracket(&r.z, &r.z), r.z.scale(&mul(&[&q(1), &two, &l])));
    assert_eq!(b.bracket(&r.x_plus, &r.x_minus), r.z);
    assert_eq!(b.bracket(&r.x_minus, &r.x_plus), r.z.neg());
    let zp = mul(&[&q(1), &two]);
    let zm = -mul(&[&q(-1), &two]);
    assert_eq!(b.bracket(&r.z, &r.x_plus), r.x_plus.scale(&zp));
    assert_eq!(b.bracket(&r.z, &r.x_minus), r.x_minus.scale(&zm));
    assert_eq!(b.bracket(&r.x_plus, &r.z).scale(&-q(2)), b.bracket(&r.z, &r.x_plus));
    assert_eq!(b.bracket(&r.x_minus, &r.z).scale(&-q(-2)), b.bracket(&r.z, &r.x_minus));
    assert_eq!(b.bracket(&r.t, &r.t), r.t.scale(&two));
    // t acts by a scalar on the rest; nothing brackets back into t
    let c = &q(3) + &q(-3);
    for x in [&r.z, &r.x_plus, &r.x_minus] {
        assert_eq!(b.bracket(&r.t, x), x.scale(&c));
        assert!(b.bracket(x, &r.t).is_zero());
    }
    assert!(b.bracket(&r.x_plus, &r.x_plus).is_zero());
    assert!(b.bracket(&r.x_minus, &r.x_minus).is_zero());
}

/// `K(x, y)` for vectors in the t^i_j basis.
fn killing(x: &SparseVec, y: &SparseVec) -> Scalar {
    let km = blie().killing_matrix();
    let mut acc = k().zero();
    for (i, a) in x.iter() {
        for (j, c) in y.iter() {
            acc += &mul(&[a, c, &km.get(i, j)]);
        }
    }
    acc
}

#[test]
fn killing_ratios() {
    let r = RescaledBasis::new(&k()).unwrap();
    let pm = killing(&r.x_plus, &r.x_minus);
    assert!(!pm.is_zero());
    assert_eq!(killing(&r.x_minus, &r.x_plus), &q(2) * &pm);
    assert_eq!(killing(&r.z, &r.z), &(&k().one() + &q(2)) * &pm);
    for (nx, x) in r.named() {
        for (ny, y) in r.named() {
            let paired = matches!((nx, ny), ("t", "t") | ("z", "z") | ("x+", "x-") | ("x-", "x+"));
            if !paired {
                assert!(killing(x, y).is_zero(), "K({nx},{ny})");
            }
        }
    }
}

#[test]
fn enveloping_relations() {
    let b = blie();
    let one = k().one();
    let l = lam();
    // α, β, γ, δ = 0, 1, 2, 3; x•y is x⊗y at index 4x + y
    let v = |terms: &[(Scalar, usize, usize)]| SparseVec::from_entries(terms.iter().map(|(c, x, y)| (4 * x + y, c.clone())));
    let printed = Subspace::span(
        16,
        vec![
            v(&[(one.clone(), 1, 0), (-q(2), 0, 1)]),
            v(&[(one.clone(), 2, 0), (-q(-2), 0, 2)]),
            v(&[(one.clone(), 3, 0), (-one.clone(), 0, 3)]),
            v(&[(one.clone(), 1, 2), (-one.clone(), 2, 1), (-l.clone(), 0, 3), (l.clone(), 0, 0)]),
            v(&[(one.clone(), 2, 3), (-one.clone(), 3, 2), (-l.clone(), 2, 0)]),
            v(&[(one.clone(), 3, 1), (-one.clone(), 1, 3), (-l.clone(), 0, 1)]),
        ],
    );
    assert_eq!(printed.dim(), 6);
    let from_braiding = b.enveloping_relations();
    let from_reflection = b.reflection_relations();
    assert_eq!(from_braiding.dim(), 6);
    assert!(printed.is_subspace_of(&from_braiding) && from_braiding.is_subspace_of(&printed));
    assert!(from_reflection.is_subspace_of(&from_braiding) && from_braiding.is_subspace_of(&from_reflection));
}

#[test]
fn monomial_partials() {
    let mc = MonomialCalculus::new(&k(), 6).unwrap();
    assert!(mc.verify_laplacian0().unwrap());
    assert!(mc.verify_partial0());
    let x = Monomial3::new(2, 1, 1);
    let p = MonoPoly::monomial(x, k().one());
    let half = mul(&[&k().sym_half(4).unwrap(), &k().sym_half(6).unwrap()]);
    assert_eq!(mc.laplace_beltrami(&p).coeff(&x), Some(&half));
}
