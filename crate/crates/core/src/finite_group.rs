//! Bicovariant calculi on the function algebra `k(G)` of a finite group from
//! an ad-stable, inversion-closed subset `C` not containing the identity.
//!
//! `Λ¹` has basis `e_a`, `a ∈ C`, with braiding `Ψ(e_a⊗e_b) = e_{aba⁻¹}⊗e_a`
//! and `Λ = B₋(Λ¹)`. The full exterior algebra `Ω = k(G)⊗Λ` is stored in
//! normal order `δ_g b_k` (index `g·dim Λ^m + k`) with `e_a f = R_a(f) e_a`,
//! `R_a(f)(x) = f(xa)`, and `d = [θ, ·}` for `θ = Σ_a e_a`.

use crate::braiding::{BraidError, BraidedSpace, Sign};
use crate::hodge::{FormAlgebra, HodgeComplex, HodgeCtx, HodgeError, Metric};
use crate::linalg::{annihilator_spectrum, Accumulator, LinMap, LinalgError, SparseVec, Subspace};
use crate::nichols::{GradedElement, NicholsAlgebra, NicholsError};
use crate::report::Check;
use crate::scalars::{FieldCtx, Scalar, ScalarError};
use serde_json::Value;
use std::collections::HashMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid group table: {0}")]
    BadTable(String),
    #[error("unknown group element `{0}`")]
    UnknownElement(String),
    #[error("generating subset contains the identity")]
    ContainsIdentity,
    #[error("generating subset is not closed under conjugation")]
    NotAdStable,
    #[error("generating subset is not closed under inversion")]
    NotInversionClosed,
    #[error("exterior algebra has no unique top form")]
    NoUniqueTopForm,
    #[error("source is not coexact: {0}")]
    NotCoexact(String),
    #[error("malformed source: {0}")]
    BadSource(String),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Nichols(#[from] NicholsError),
    #[error(transparent)]
    Hodge(#[from] HodgeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    /// `table[g][h]` is the index of `gh`; group axioms are checked.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = names.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(GroupError::BadTable("table must be square over the element list".into()));
        }
        let mut seen = std::collections::HashSet::new();
        if !names.iter().all(|s| seen.insert(s.as_str())) {
            return Err(GroupError::BadTable("duplicate element names".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| GroupError::BadTable("no identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::BadTable("not associative".into()));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|g| (0..n).find(|&h| table[g][h] == identity).ok_or_else(|| GroupError::BadTable("missing inverse".into())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteGroup { names, table, inverse, identity })
    }

    /// A closed set of permutations of `{0..k}`, multiplied as `(στ)(i) = σ(τ(i))`.
    pub fn from_permutations(names: Vec<String>, perms: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| {
                        let st: Vec<usize> = t.iter().map(|&i| s[i]).collect();
                        index.get(st.as_slice()).copied().ok_or_else(|| GroupError::BadTable("permutations not closed".into()))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_table(names, table)
    }

    /// `S₃` with `u = (12)`, `v = (23)`, `w = (13)` and the 3-cycles `uv`, `vu`.
    pub fn symmetric3() -> Self {
        let names = ["e", "u", "v", "w", "uv", "vu"].map(String::from).to_vec();
        let perms = vec![vec![0, 1, 2], vec![1, 0, 2], vec![0, 2, 1], vec![2, 1, 0], vec![1, 2, 0], vec![2, 0, 1]];
        Self::from_permutations(names, perms).expect("S3 is a group")
    }

    /// `ℤ_n` with elements `g0..g{n-1}`.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n).map(|i| format!("g{i}")).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(names, table).expect("cyclic group")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize, GroupError> {
        self.names.iter().position(|s| s == name).ok_or_else(|| GroupError::UnknownElement(name.to_string()))
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    /// `g a g⁻¹`.
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn product_of(&self, word: &[usize]) -> usize {
        word.iter().fold(self.identity, |acc, &g| self.mul(acc, g))
    }
}

/// Result of solving `□α = J` on coexact 1-forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxwellSolution {
    pub alpha: GradedElement,
    pub residual_zero: bool,
}

/// The calculus on `k(G)` defined by `C`, with `Λ`, the metric
/// `g = Σ e_a⊗e_{a⁻¹}`, the Hodge star and the full exterior algebra `Ω`.
#[derive(Clone, Debug)]
pub struct GroupCalculus {
    group: FiniteGroup,
    subset: Vec<usize>,
    hodge: HodgeCtx,
    grading: Vec<Vec<usize>>,
    theta: SparseVec,
    vol: GradedElement,
    omega: HodgeComplex,
}

impl GroupCalculus {
    /// `subset` lists the elements of `C` by name; `vol` optionally names the
    /// top-form monomial, otherwise the top basis monomial is used.
    pub fn new(group: FiniteGroup, subset: &[&str], vol: Option<&[&str]>, max_degree: usize) -> Result<Self, GroupError> {
        let ctx = FieldCtx::Rational;
        let c: Vec<usize> = subset.iter().map(|s| group.index_of(s)).collect::<Result<_, _>>()?;
        if c.contains(&group.identity()) {
            return Err(GroupError::ContainsIdentity);
        }
        let pos = |g: usize| c.iter().position(|&x| x == g);
        for &a in &c {
            if (0..group.order()).any(|g| pos(group.conj(g, a)).is_none()) {
                return Err(GroupError::NotAdStable);
            }
        }
        if c.iter().any(|&a| pos(group.inv(a)).is_none()) {
            return Err(GroupError::NotInversionClosed);
        }
        let labels: Vec<String> = c.iter().map(|&a| format!("e_{}", group.name(a))).collect();
        let space = BraidedSpace::from_rule(labels, &ctx, |i, j| {
            let (a, b) = (c[i], c[j]);
            vec![(pos(group.conj(a, b)).expect("ad-stable"), i, ctx.one())]
        })?;
        let alg = NicholsAlgebra::build(space, Sign::Minus, max_degree)?;
        let n = alg.top_degree().ok_or(GroupError::NoUniqueTopForm)?;
        if alg.dim(n) != 1 {
            return Err(GroupError::NoUniqueTopForm);
        }
        let vol = match vol {
            Some(w) => alg.word(w)?,
            None => alg.basis_element(n, 0),
        };
        let grading = (0..=n)
            .map(|m| {
                let sp = alg.space();
                alg.survivors(m).iter().map(|&s| group.product_of(&sp.digits(s, m).iter().map(|&i| c[i]).collect::<Vec<_>>())).collect()
            })
            .collect();
        let d = c.len();
        let metric = Metric::from_tensor(LinMap::from_fn(d, d, &ctx, |i, j| {
            if c[j] == group.inv(c[i]) {
                ctx.one()
            } else {
                ctx.zero()
            }
        }))?;
        let theta = SparseVec::from_entries((0..d).map(|i| (i, ctx.one())));
        let alg = Arc::new(alg);
        let hodge = HodgeCtx::new(alg, metric, Some(&vol))?.with_inner_differential(&theta)?;
        let placeholder = hodge.complex()?.clone();
        let mut calc = GroupCalculus { group, subset: c, hodge, grading, theta, vol, omega: placeholder };
        calc.omega = calc.build_omega_complex()?;
        Ok(calc)
    }

    /// The standard 3D calculus on `S₃` from the 2-cycles, `Vol = e_ue_ve_ue_w`.
    pub fn s3() -> Result<Self, GroupError> {
        Self::new(FiniteGroup::symmetric3(), &["u", "v", "w"], Some(&["e_u", "e_v", "e_u", "e_w"]), 6)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn lambda(&self) -> &Arc<NicholsAlgebra> {
        self.hodge.algebra()
    }

    pub fn hodge(&self) -> &HodgeCtx {
        &self.hodge
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.hodge.ctx()
    }

    pub fn top(&self) -> usize {
        self.hodge.top()
    }

    pub fn theta(&self) -> &SparseVec {
        &self.theta
    }

    pub fn volume(&self) -> &GradedElement {
        &self.vol
    }

    pub fn omega_complex(&self) -> &HodgeComplex {
        &self.omega
    }

    /// Group degree of the `k`-th basis element of `Λ^m`.
    pub fn group_degree(&self, m: usize, k: usize) -> usize {
        self.grading[m][k]
    }

    /// Position of `a ∈ C` among the generators.
    pub fn generator_of(&self, a: usize) -> Option<usize> {
        self.subset.iter().position(|&x| x == a)
    }

    fn lam_dim(&self, m: usize) -> usize {
        self.lambda().dim(m)
    }

    pub fn omega_dim(&self, m: usize) -> usize {
        self.group.order() * self.lam_dim(m)
    }

    pub fn omega_dims(&self) -> Vec<usize> {
        (0..=self.top()).map(|m| self.omega_dim(m)).collect()
    }

    // ---- elements of Ω ----

    /// `δ_g ⊗ b_k` in degree `m`.
    pub fn basis_form(&self, m: usize, g: usize, k: usize) -> GradedElement {
        GradedElement::homogeneous(self.ctx(), m, SparseVec::unit(g * self.lam_dim(m) + k, self.ctx()))
    }

    /// The function with the given values.
    pub fn function(&self, values: &[Scalar]) -> GradedElement {
        GradedElement::homogeneous(self.ctx(), 0, SparseVec::from_dense(values))
    }

    pub fn delta(&self, g: usize) -> GradedElement {
        self.basis_form(0, g, 0)
    }

    /// A left-invariant form `1 ⊗ x`.
    pub fn constant(&self, x: &GradedElement) -> GradedElement {
        x.map_parts(|m, v| {
            let dm = self.lam_dim(m);
            let mut acc = Accumulator::new();
            for g in 0..self.group.order() {
                for (k, c) in v.iter() {
                    acc.add(g * dm + k, c);
                }
            }
            Some(acc.finish())
        })
    }

    /// `Σ_a f_a e_a` from per-generator coefficient functions.
    pub fn one_form(&self, coeffs: &[Vec<Scalar>]) -> GradedElement {
        let d = self.lam_dim(1);
        let mut acc = Accumulator::new();
        for (a, f) in coeffs.iter().enumerate() {
            for (g, c) in f.iter().enumerate() {
                acc.add(g * d + a, c);
            }
        }
        GradedElement::homogeneous(self.ctx(), 1, acc.finish())
    }

    /// Coefficient functions of a 1-form, one per generator.
    pub fn one_form_coefficients(&self, x: &GradedElement) -> Vec<Vec<Scalar>> {
        let d = self.lam_dim(1);
        let v = x.component(1);
        (0..d)
            .map(|a| (0..self.group.order()).map(|g| v.get(g * d + a).cloned().unwrap_or_else(|| self.ctx().zero())).collect())
            .collect()
    }

    /// Parses `{"e_u": c | [c_g...] | {"g": c, ...}, ...}` into a 1-form;
    /// a bare scalar is a constant coefficient.
    pub fn parse_one_form(&self, v: &Value) -> Result<GradedElement, GroupError> {
        let obj = v.as_object().ok_or_else(|| GroupError::BadSource("expected an object".into()))?;
        let ctx = self.ctx().clone();
        let n = self.group.order();
        let labels = self.lambda().space().labels().to_vec();
        let mut coeffs = vec![vec![ctx.zero(); n]; labels.len()];
        for (key, val) in obj {
            let a = labels.iter().position(|l| l == key).ok_or_else(|| GroupError::BadSource(format!("unknown 1-form `{key}`")))?;
            match val {
                Value::Array(xs) => {
                    if xs.len() != n {
                        return Err(GroupError::BadSource(format!("`{key}` needs {n} values")));
                    }
                    for (g, x) in xs.iter().enumerate() {
                        coeffs[a][g] = ctx.parse_json(x)?;
                    }
                }
                Value::Object(m) => {
                    for (g, x) in m {
                        coeffs[a][self.group.index_of(g)?] = ctx.parse_json(x)?;
                    }
                }
                other => {
                    let c = ctx.parse_json(other)?;
                    coeffs[a] = vec![c; n];
                }
            }
        }
        Ok(self.one_form(&coeffs))
    }

    /// Emits a 1-form in the schema accepted by [`Self::parse_one_form`].
    pub fn one_form_to_json(&self, x: &GradedElement) -> Value {
        let labels = self.lambda().space().labels();
        let mut out = serde_json::Map::new();
        for (a, f) in self.one_form_coefficients(x).into_iter().enumerate() {
            let mut m = serde_json::Map::new();
            for (g, c) in f.iter().enumerate() {
                if !c.is_zero() {
                    m.insert(self.group.name(g).to_string(), c.to_json());
                }
            }
            if !m.is_empty() {
                out.insert(labels[a].clone(), Value::Object(m));
            }
        }
        Value::Object(out)
    }

    /// `(δ_g b_k)(δ_h b_l) = [h = g|b_k|] δ_g (b_k b_l)`.
    fn mul_basis(&self, r: usize, g: usize, k: usize, s: usize, h: usize, l: usize) -> Result<SparseVec, NicholsError> {
        if self.group.mul(g, self.grading[r][k]) != h || r + s > self.top() {
            return Ok(SparseVec::new());
        }
        let prod = self.lambda().mul_basis(r, k, s, l)?;
        let dm = self.lam_dim(r + s);
        Ok(prod.map_indices(|j| g * dm + j))
    }

    pub fn omega_mul(&self, x: &GradedElement, y: &GradedElement) -> Result<GradedElement, NicholsError> {
        let mut out = GradedElement::zero(self.ctx());
        for (r, a) in x.parts() {
            for (s, b) in y.parts() {
                if r + s > self.top() {
                    continue;
                }
                let (dr, ds) = (self.lam_dim(r), self.lam_dim(s));
                let mut acc = Accumulator::new();
                for (i, u) in a.iter() {
                    for (j, v) in b.iter() {
                        let p = self.mul_basis(r, i / dr, i % dr, s, j / ds, j % ds)?;
                        acc.add_vec(&p, &(u * v));
                    }
                }
                out = out.add(&GradedElement::homogeneous(self.ctx(), r + s, acc.finish()));
            }
        }
        Ok(out)
    }

    fn build_omega_complex(&self) -> Result<HodgeComplex, GroupError> {
        let ctx = self.ctx().clone();
        let n = self.top();
        let theta = self.constant(&GradedElement::homogeneous(&ctx, 1, self.theta.clone()));
        let d = (0..n)
            .map(|m| {
                let cols = (0..self.omega_dim(m))
                    .map(|i| {
                        let b = GradedElement::homogeneous(&ctx, m, SparseVec::unit(i, &ctx));
                        let l = self.omega_mul(&theta, &b)?;
                        let r = self.omega_mul(&b, &theta)?;
                        let sign = if m % 2 == 0 { ctx.one() } else { -ctx.one() };
                        Ok(l.sub(&r.scale(&sign)).component(m + 1))
                    })
                    .collect::<Result<Vec<_>, GroupError>>()?;
                Ok(LinMap::from_columns(self.omega_dim(m + 1), &ctx, cols))
            })
            .collect::<Result<Vec<_>, GroupError>>()?;
        let s_sharp = (0..=n).map(|m| self.lift_lambda_map(&self.hodge.s_sharp_map(m), m, n - m)).collect();
        Ok(HodgeComplex::new(&ctx, d, s_sharp)?)
    }

    /// `id_{k(G)} ⊗ f` for a map `f: Λ^m -> Λ^k`.
    pub fn lift_lambda_map(&self, f: &LinMap, m: usize, k: usize) -> LinMap {
        let (dm, dk) = (self.lam_dim(m), self.lam_dim(k));
        let cols = (0..self.group.order() * dm).map(|i| f.column(i % dm).map_indices(|j| (i / dm) * dk + j)).collect();
        LinMap::from_columns(self.group.order() * dk, self.ctx(), cols)
    }

    /// `η ⊢ ω` on `Ω`, with `(f e_a, h e_b) = f R_a(h) (e_a, e_b)`.
    pub fn omega_interior(&self, eta: &GradedElement, omega: &GradedElement) -> Result<GradedElement, NicholsError> {
        let alg = self.lambda();
        let d1 = self.lam_dim(1);
        let eta = eta.component(1);
        let metric = self.hodge.metric();
        let mut out = GradedElement::zero(self.ctx());
        for (m, v) in omega.parts() {
            if m == 0 {
                continue;
            }
            let (dm, dl) = (self.lam_dim(m), self.lam_dim(m - 1));
            let mut acc = Accumulator::new();
            for (j, w) in v.iter() {
                let (y, k) = (j / dm, j % dm);
                let delta = alg.coproduct_homog(m, &SparseVec::unit(k, self.ctx()), 1)?;
                for (i, x) in eta.iter() {
                    let (g, a) = (i / d1, i % d1);
                    // δ_g R_a(δ_y) = [g = y a⁻¹] δ_g.
                    if g != self.group.mul(y, self.group.inv(self.subset[a])) {
                        continue;
                    }
                    let xw = x * w;
                    for (t, c) in delta.iter() {
                        let gm = metric.pairing(a, t / dl);
                        if !gm.is_zero() {
                            acc.add(g * dl + t % dl, &(&(&xw * c) * &gm));
                        }
                    }
                }
            }
            out = out.add(&GradedElement::homogeneous(self.ctx(), m - 1, acc.finish()));
        }
        Ok(out)
    }

    /// Right translation `(R_a f)(x) = f(xa)` on `k(G)`.
    pub fn right_translation(&self, a: usize) -> LinMap {
        let n = self.group.order();
        LinMap::from_action(n, n, self.ctx(), |h| SparseVec::unit(self.group.mul(h, self.group.inv(a)), self.ctx()))
    }

    /// `∂^a = R_a - id`, so that `df = Σ_a (∂^a f) e_a`.
    pub fn partial(&self, a: usize) -> LinMap {
        let n = self.group.order();
        self.right_translation(self.subset[a]).sub(&LinMap::identity(n, self.ctx())).expect("shapes")
    }

    /// `∫_G (J, θ) = Σ_x Σ_{a,b} J_a(x) (e_a, e_b)`.
    pub fn integral_pairing_with_theta(&self, j: &GradedElement) -> Scalar {
        let metric = self.hodge.metric();
        let d = self.lam_dim(1);
        let mut acc = self.ctx().zero();
        for (i, c) in j.component(1).iter() {
            let a = i % d;
            for b in 0..d {
                acc += &(c * &metric.pairing(a, b));
            }
        }
        acc
    }

    /// The coexact 1-forms `image(δ: Ω² -> Ω¹)`.
    pub fn coexact_one_forms(&self) -> Subspace {
        self.omega.codifferential_map(2).image()
    }

    /// `□` restricted to the coexact 1-forms, in the basis of
    /// [`Self::coexact_one_forms`].
    pub fn coexact_laplacian(&self) -> Result<(Subspace, LinMap), GroupError> {
        let sub = self.coexact_one_forms();
        let basis = LinMap::from_columns(self.omega_dim(1), self.ctx(), sub.basis().to_vec());
        let lap = self.omega.laplacian_map(1);
        let cols = sub
            .basis()
            .iter()
            .map(|v| basis.solve(&lap.apply(v)).ok_or_else(|| GroupError::NotCoexact("□ leaves the coexact subspace".into())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((sub.clone(), LinMap::from_columns(sub.dim(), self.ctx(), cols)))
    }

    /// Decides coexactness of `J` by `δJ = 0` and `∫_G (J,θ) = 0`, cross-checks
    /// membership in `image δ`, then solves `□α = J` with `α` coexact.
    pub fn maxwell(&self, j: &GradedElement) -> Result<MaxwellSolution, GroupError> {
        if j.degrees().iter().any(|&m| m != 1) {
            return Err(GroupError::BadSource("source must be a 1-form".into()));
        }
        if !self.omega.codifferential(j).is_zero() {
            return Err(GroupError::NotCoexact("codifferential nonzero".into()));
        }
        if !self.integral_pairing_with_theta(j).is_zero() {
            return Err(GroupError::NotCoexact("integral pairing nonzero".into()));
        }
        let (sub, lap) = self.coexact_laplacian()?;
        let basis = LinMap::from_columns(self.omega_dim(1), self.ctx(), sub.basis().to_vec());
        let coords = basis
            .solve(&j.component(1))
            .ok_or_else(|| GroupError::NotCoexact("not in the image of the codifferential".into()))?;
        let sol = lap.solve(&coords).ok_or_else(|| GroupError::NotCoexact("Laplacian singular on coexact forms".into()))?;
        let alpha = GradedElement::homogeneous(self.ctx(), 1, basis.apply(&sol));
        let residual_zero = self.omega.laplacian(&alpha) == *j && self.omega.codifferential(&alpha).is_zero();
        Ok(MaxwellSolution { alpha, residual_zero })
    }

    /// The point source `J_x = (3δ_x - 1)θ + 3 Σ_a δ_{xa} e_a`.
    pub fn point_source(&self, x: usize) -> GradedElement {
        let ctx = self.ctx();
        let n = self.group.order();
        let coeffs: Vec<Vec<Scalar>> = self
            .subset
            .iter()
            .map(|&a| {
                (0..n)
                    .map(|g| {
                        let mut c = if g == x { ctx.int(2) } else { -ctx.one() };
                        if g == self.group.mul(x, a) {
                            c += &ctx.int(3);
                        }
                        c
                    })
                    .collect()
            })
            .collect();
        self.one_form(&coeffs)
    }

    // ---- crossed-module structure on Λ ----

    /// `ϖπ_ε(δ_x)`: `e_x` on `C`, `-θ` at the identity, zero elsewhere.
    pub fn varpi(&self, x: usize) -> SparseVec {
        if x == self.group.identity() {
            self.theta.neg()
        } else {
            self.generator_of(x).map_or_else(SparseVec::new, |a| SparseVec::unit(a, self.ctx()))
        }
    }

    /// `v ◁ δ_x`: the group-degree-`x` component.
    pub fn act_delta(&self, m: usize, v: &SparseVec, x: usize) -> SparseVec {
        SparseVec::from_entries(v.iter().filter(|(k, _)| self.grading[m][*k] == x).map(|(k, c)| (k, c.clone())))
    }

    /// `v ◁ π_ε(δ_g)`.
    fn act_augmented(&self, m: usize, v: &SparseVec, g: usize) -> SparseVec {
        let w = self.act_delta(m, v, g);
        if g == self.group.identity() {
            w.sub(v)
        } else {
            w
        }
    }

    /// The coaction leg `b ↦ b_{(0)}` paired with `δ_g`: relabel by `a ↦ gag⁻¹`.
    pub fn conjugate(&self, m: usize, v: &SparseVec, g: usize) -> Result<SparseVec, GroupError> {
        let alg = self.lambda();
        let sp = alg.space();
        let mut acc = Accumulator::new();
        for (k, c) in v.iter() {
            let digits: Vec<usize> = sp
                .digits(alg.survivors(m)[k], m)
                .iter()
                .map(|&i| self.generator_of(self.group.conj(g, self.subset[i])).expect("ad-stable"))
                .collect();
            let idx = sp.index_of(&digits);
            acc.add_vec(&alg.project(m, &SparseVec::unit(idx, self.ctx()))?, c);
        }
        Ok(acc.finish())
    }

    fn d_lambda(&self, m: usize, v: &SparseVec) -> SparseVec {
        self.hodge.complex().expect("installed").d_map(m).apply(v)
    }

    fn lam_mul(&self, r: usize, a: &SparseVec, s: usize, b: &SparseVec) -> Result<SparseVec, GroupError> {
        if r + s > self.top() {
            return Ok(SparseVec::new());
        }
        Ok(self.lambda().mul_homog(r, a, s, b)?)
    }

    /// Maurer–Cartan `dϖ(a) + (ϖπ_ε a₁)(ϖπ_ε a₂) = 0` on every `π_ε δ_g`.
    pub fn verify_maurer_cartan(&self) -> Result<Check, GroupError> {
        let n = self.group.order();
        let mut failures = Vec::new();
        for g in 0..n {
            let mut acc = self.d_lambda(1, &self.varpi(g));
            for x in 0..n {
                let y = self.group.mul(self.group.inv(x), g);
                acc = acc.add(&self.lam_mul(1, &self.varpi(x), 1, &self.varpi(y))?);
            }
            if !acc.is_zero() {
                failures.push(self.group.name(g).to_string());
            }
        }
        Ok(Check::holds("maurer_cartan", failures.is_empty(), format!("failing at {failures:?}")))
    }

    /// `(dη)◁a - d(η◁a) = (ϖπ_ε a₁)(η◁a₂) - (-1)^{|η|}(η◁a₁)(ϖπ_ε a₂)` for
    /// every basis `η` and every `a = π_ε δ_g`.
    pub fn verify_module_compatibility(&self) -> Result<Check, GroupError> {
        let (n, top) = (self.group.order(), self.top());
        let ctx = self.ctx().clone();
        let mut bad = 0usize;
        for m in 0..=top {
            for k in 0..self.lam_dim(m) {
                let eta = SparseVec::unit(k, &ctx);
                let deta = self.d_lambda(m, &eta);
                for g in 0..n {
                    let lhs = if m < top { self.act_augmented(m + 1, &deta, g) } else { SparseVec::new() }
                        .sub(&self.d_lambda(m, &self.act_augmented(m, &eta, g)));
                    let mut rhs = SparseVec::new();
                    let sign = if m % 2 == 0 { ctx.one() } else { -ctx.one() };
                    for x in 0..n {
                        let y = self.group.mul(self.group.inv(x), g);
                        rhs = rhs.add(&self.lam_mul(1, &self.varpi(x), m, &self.act_delta(m, &eta, y))?);
                        rhs = rhs.add_scaled(&self.lam_mul(m, &self.act_delta(m, &eta, x), 1, &self.varpi(y))?, &-sign.clone());
                    }
                    if lhs != rhs {
                        bad += 1;
                    }
                }
            }
        }
        Ok(Check::holds("module_compatibility", bad == 0, format!("{bad} failing pairs")))
    }

    /// `(f ⊗ h)` applied to a vector in `Λ^r ⊗ Λ^s`.
    /// `s` and `s2` are the right-leg degrees before and after.
    fn tensor_apply(
        &self,
        v: &SparseVec,
        s: usize,
        s2: usize,
        f: impl Fn(&SparseVec) -> Result<SparseVec, GroupError>,
        h: impl Fn(&SparseVec) -> Result<SparseVec, GroupError>,
    ) -> Result<SparseVec, GroupError> {
        let ctx = self.ctx();
        let (ds, ds2) = (self.lam_dim(s), self.lam_dim(s2));
        let mut acc = Accumulator::new();
        for (idx, c) in v.iter() {
            let a = f(&SparseVec::unit(idx / ds, ctx))?;
            let b = h(&SparseVec::unit(idx % ds, ctx))?;
            for (i, x) in a.iter() {
                for (j, y) in b.iter() {
                    acc.add(i * ds2 + j, &(&(c * x) * y));
                }
            }
        }
        Ok(acc.finish())
    }

    fn coproduct(&self, m: usize, v: &SparseVec, r: usize) -> Result<SparseVec, GroupError> {
        if m > self.top() {
            return Ok(SparseVec::new());
        }
        Ok(self.lambda().coproduct_homog(m, v, r)?)
    }

    /// The coderivation identity relating `Δ d`, `(d⊗id + (-1)^{|·|}⊗d)Δ` and
    /// the coaction term, on every basis `η` and every bidegree.
    pub fn verify_coderivation(&self) -> Result<Check, GroupError> {
        let (n, top) = (self.group.order(), self.top());
        let ctx = self.ctx().clone();
        let mut bad = 0usize;
        let sign = |r: usize| if r.is_multiple_of(2) { ctx.one() } else { -ctx.one() };
        for m in 0..=top {
            for k in 0..self.lam_dim(m) {
                let eta = SparseVec::unit(k, &ctx);
                let deta = self.d_lambda(m, &eta);
                for r in 0..=m + 1 {
                    let s = m + 1 - r;
                    if r > top || s > top {
                        continue;
                    }
                    let mut lhs = if m < top { self.coproduct(m + 1, &deta, r)? } else { SparseVec::new() };
                    if r >= 1 {
                        let delta = self.coproduct(m, &eta, r - 1)?;
                        let t = self.tensor_apply(&delta, s, s, |x| Ok(self.d_lambda(r - 1, x)), |y| Ok(y.clone()))?;
                        lhs = lhs.sub(&t);
                    }
                    let mut rhs = SparseVec::new();
                    if r <= m {
                        let delta = self.coproduct(m, &eta, r)?;
                        let t = self.tensor_apply(&delta, s - 1, s, |x| Ok(x.clone()), |y| Ok(self.d_lambda(s - 1, y)))?;
                        lhs = lhs.add_scaled(&t, &-sign(r));
                        for g in 0..n {
                            let w = self.varpi(g);
                            let t = self.tensor_apply(&delta, s - 1, s, |x| self.conjugate(r, x, g), |y| self.lam_mul(1, &w, s - 1, y))?;
                            rhs = rhs.add_scaled(&t, &sign(r));
                        }
                    }
                    if lhs != rhs {
                        bad += 1;
                    }
                }
            }
        }
        Ok(Check::holds("coderivation", bad == 0, format!("{bad} failing components")))
    }

    /// `(ϖπ_ε ⊗ ϖπ_ε)Δ(ker ϖ) ⊆ ker(id - Ψ)`.
    pub fn verify_quadratic_relations(&self) -> Result<Check, GroupError> {
        let n = self.group.order();
        let d = self.lam_dim(1);
        let rel = self.lambda().relations(2);
        let mut ok = true;
        for g in (0..n).filter(|&g| g != self.group.identity() && self.generator_of(g).is_none()) {
            let mut acc = Accumulator::new();
            for x in 0..n {
                let y = self.group.mul(self.group.inv(x), g);
                for (i, a) in self.varpi(x).iter() {
                    for (j, b) in self.varpi(y).iter() {
                        acc.add(i * d + j, &(a * b));
                    }
                }
            }
            ok &= rel.contains(&acc.finish());
        }
        Ok(Check::holds("quadratic_relations_in_kernel", ok, "degree-2 images of ker ϖ"))
    }

    /// `d` on products `ϖ(x)ϖ(y)` from the cobar coboundary, compared with `[θ, ·}`.
    pub fn verify_cobar_differential(&self) -> Result<Check, GroupError> {
        let n = self.group.order();
        let mut ok = true;
        for x in 0..n {
            for y in 0..n {
                let (wx, wy) = (self.varpi(x), self.varpi(y));
                let lhs = self.d_lambda(2, &self.lam_mul(1, &wx, 1, &wy)?);
                let mut rhs = SparseVec::new();
                for x1 in 0..n {
                    let x2 = self.group.mul(self.group.inv(x1), x);
                    let t = self.lam_mul(2, &self.lam_mul(1, &self.varpi(x1), 1, &self.varpi(x2))?, 1, &wy)?;
                    rhs = rhs.sub(&t);
                    let y2 = self.group.mul(self.group.inv(x1), y);
                    let t = self.lam_mul(1, &wx, 2, &self.lam_mul(1, &self.varpi(x1), 1, &self.varpi(y2))?)?;
                    rhs = rhs.add(&t);
                }
                ok &= lhs == rhs;
            }
        }
        Ok(Check::holds("cobar_differential_deg2", ok, "d(ϖ(x)ϖ(y)) for all x, y"))
    }

    /// `Vol` is invariant under the coaction and commutes with functions.
    pub fn verify_volume(&self) -> Result<Vec<Check>, GroupError> {
        let n = self.top();
        let v = self.vol.component(n);
        let mut invariant = true;
        for g in 0..self.group.order() {
            invariant &= self.conjugate(n, &v, g)? == v;
        }
        let vol = self.constant(&self.vol);
        let mut central = true;
        for g in 0..self.group.order() {
            let f = self.delta(g);
            central &= self.omega_mul(&vol, &f)? == self.omega_mul(&f, &vol)?;
        }
        let mut theta_inv = true;
        for g in 0..self.group.order() {
            theta_inv &= self.conjugate(1, &self.theta, g)? == self.theta;
        }
        Ok(vec![
            Check::holds("volume_bi_invariant", invariant, "Δ_R Vol = Vol ⊗ 1"),
            Check::holds("volume_central", central, "[Vol, δ_g] = 0"),
            Check::holds("theta_bi_invariant", theta_inv, "Δ_R θ = θ ⊗ 1"),
        ])
    }

    /// All structure checks.
    pub fn structure_checks(&self) -> Result<Vec<Check>, GroupError> {
        let ctx = self.ctx();
        let mut checks = vec![
            self.verify_maurer_cartan()?,
            self.verify_module_compatibility()?,
            self.verify_coderivation()?,
            self.verify_quadratic_relations()?,
            self.verify_cobar_differential()?,
        ];
        let dtheta = self.d_lambda(1, &self.theta);
        checks.push(Check::holds("d_theta_zero", dtheta.is_zero(), format!("{} terms", dtheta.nnz())));
        checks.extend(self.verify_volume()?);
        let sp = self.lambda().space();
        let (p1, p2) = (sp.lift(1, 3)?, sp.lift(2, 3)?);
        let braid = p1.compose(&p2)?.compose(&p1)? == p2.compose(&p1)?.compose(&p2)?;
        checks.push(Check::holds("braid_relation", braid, "Ψ₁Ψ₂Ψ₁ = Ψ₂Ψ₁Ψ₂"));
        let d0 = self.omega.d_map(0);
        let from_partials = (0..self.omega_dim(0))
            .map(|g| {
                let f = SparseVec::unit(g, ctx);
                let d1 = self.lam_dim(1);
                let mut acc = Accumulator::new();
                for a in 0..d1 {
                    for (x, c) in self.partial(a).apply(&f).iter() {
                        acc.add(x * d1 + a, c);
                    }
                }
                acc.finish()
            })
            .collect();
        let expect = LinMap::from_columns(self.omega_dim(1), ctx, from_partials);
        checks.push(Check::compare("d_on_functions_partials", &expect, &d0));
        Ok(checks)
    }

    /// `□|₀` and the sum of partial derivatives.
    pub fn function_laplacian(&self) -> LinMap {
        self.omega.laplacian_map(0)
    }

    pub fn partial_sum(&self) -> LinMap {
        let n = self.group.order();
        (0..self.lam_dim(1)).fold(LinMap::zero(n, n, self.ctx()), |acc, a| acc.add(&self.partial(a)).expect("shapes"))
    }

    /// Eigenspace dimensions of `f` for the given roots.
    pub fn spectrum(f: &LinMap, roots: &[i64]) -> Result<Vec<usize>, GroupError> {
        let k = f.ctx().clone();
        let r: Vec<Scalar> = roots.iter().map(|&x| k.int(x)).collect();
        Ok(annihilator_spectrum(f, &r)?)
    }
}

impl FormAlgebra for GroupCalculus {
    fn complex(&self) -> Result<&HodgeComplex, HodgeError> {
        Ok(&self.omega)
    }

    fn form_ctx(&self) -> &FieldCtx {
        self.ctx()
    }

    fn mul(&self, a: &GradedElement, b: &GradedElement) -> Result<GradedElement, HodgeError> {
        Ok(self.omega_mul(a, b)?)
    }

    fn interior(&self, eta: &GradedElement, omega: &GradedElement) -> Result<GradedElement, HodgeError> {
        Ok(self.omega_interior(eta, omega)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_table() {
        let g = FiniteGroup::symmetric3();
        let (u, v, w) = (1, 2, 3);
        assert_eq!(g.conj(u, v), w);
        assert_eq!(g.mul(u, v), 4);
        assert_eq!(g.mul(v, u), 5);
        assert_eq!(g.inv(4), 5);
    }

    #[test]
    fn rejects_bad_subsets() {
        let g = FiniteGroup::symmetric3();
        assert_eq!(GroupCalculus::new(g.clone(), &["u"], None, 6).unwrap_err(), GroupError::NotAdStable);
        assert_eq!(GroupCalculus::new(g.clone(), &["e"], None, 6).unwrap_err(), GroupError::ContainsIdentity);
        assert_eq!(GroupCalculus::new(g, &["uv"], None, 6).unwrap_err(), GroupError::NotAdStable);
        let z3 = FiniteGroup::cyclic(3);
        assert_eq!(GroupCalculus::new(z3, &["g1"], None, 6).unwrap_err(), GroupError::NotInversionClosed);
    }

    #[test]
    fn z2_is_a_line() {
        let c = GroupCalculus::new(FiniteGroup::cyclic(2), &["g1"], None, 4).unwrap();
        assert_eq!(c.lambda().dims(), vec![1, 1]);
        // The top form e is not central: e δ_g = δ_{g+1} e.
        for k in c.structure_checks().unwrap() {
            assert_eq!(k.pass, k.id != "volume_central", "{}", k.id);
        }
    }
}
