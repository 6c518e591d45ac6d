//! Printable tables for the shipped examples: relations, Hilbert series,
//! `exp` blocks, Hodge star, antipode, metric, braiding, Killing form and
//! brackets.

use crate::braiding::BraidedSpace;
use crate::finite_group::GroupCalculus;
use crate::fourier::FourierCtx;
use crate::hodge::HodgeCtx;
use crate::linalg::{LinMap, SparseVec};
use crate::nichols::{format_term, join_terms, GradedElement, NicholsAlgebra};
use crate::qplane::{anyonic_line, fermionic_plane, PlaneCalculus, PlaneForm};
use crate::qsl2::{BLieAlgebra, RMatrix, RescaledBasis, Sl2Calculus};
use crate::scalars::{FieldCtx, Scalar};
use crate::suites::{killing_in_rescaled_basis, SuiteConfig};
use serde_json::{json, Value};
use std::fmt::Write as _;
use thiserror::Error;

pub const EXAMPLES: [&str; 5] = ["s3", "sl2", "qplane", "fermionic", "anyonic"];
pub const WHATS: [&str; 9] = ["relations", "dims", "exp", "hodge", "antipode", "metric", "braiding", "killing", "bracket"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("unknown example '{0}'")]
    UnknownExample(String),
    #[error("unknown table '{0}'")]
    UnknownWhat(String),
    #[error("example '{example}' has no '{what}' table")]
    NotAvailable { example: String, what: String },
    #[error("construction failed: {0}")]
    Construction(String),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Text(String),
    Int(usize),
    Scalar(Scalar),
}

impl Cell {
    pub fn to_json(&self) -> Value {
        match self {
            Cell::Text(s) => json!(s),
            Cell::Int(n) => json!(n),
            Cell::Scalar(c) => c.to_json(),
        }
    }

    /// Human-readable form, used for text and CSV.
    pub fn plain(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(n) => n.to_string(),
            Cell::Scalar(c) => c.to_string(),
        }
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n)
    }
}

impl From<Scalar> for Cell {
    fn from(c: Scalar) -> Self {
        Cell::Scalar(c)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub example: String,
    pub what: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(example: &str, what: &str) -> Self {
        Table { example: example.to_string(), what: what.to_string(), columns: Vec::new(), rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<Cell>) {
        self.rows.push(row);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "example": self.example,
            "what": self.what,
            "columns": self.columns,
            "rows": self.rows.iter().map(|r| r.iter().map(Cell::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    /// Columns padded to their widest entry.
    pub fn to_text(&self) -> String {
        let plain: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::plain).collect()).collect();
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for r in &plain {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
                if i + 1 == cells.len() {
                    s.push_str(c);
                } else {
                    let _ = write!(s, "{c}{}  ", " ".repeat(w - c.chars().count()));
                }
            }
            s.trim_end().to_string()
        };
        let mut out = format!("# {} {}\n", self.example, self.what);
        out.push_str(&line(&self.columns));
        out.push('\n');
        for r in &plain {
            out.push_str(&line(r));
            out.push('\n');
        }
        out
    }
}

type Res<T> = Result<T, TableError>;

fn built<T, E: std::fmt::Display>(r: Result<T, E>) -> Res<T> {
    r.map_err(|e| TableError::Construction(e.to_string()))
}

/// Builds one table.
pub fn table(example: &str, what: &str, cfg: &SuiteConfig) -> Res<Table> {
    if !EXAMPLES.contains(&example) {
        return Err(TableError::UnknownExample(example.to_string()));
    }
    if !WHATS.contains(&what) {
        return Err(TableError::UnknownWhat(what.to_string()));
    }
    let missing = || TableError::NotAvailable { example: example.to_string(), what: what.to_string() };
    let mut t = Table::new(example, what);
    match example {
        "s3" => {
            if cfg.field.as_ref().is_some_and(|f| *f != FieldCtx::Rational) {
                return Err(TableError::Construction("the S₃ calculus is defined over rational".into()));
            }
            let c = built(GroupCalculus::s3())?;
            match what {
                "metric" => metric(&mut t, c.lambda(), c.hodge()),
                "hodge" => map_table(&mut t, c.lambda(), |x| c.hodge().hodge(x), "♯x"),
                _ => algebra_table(&mut t, what, c.lambda(), Some(c.hodge().fourier())).ok_or_else(missing)?,
            }
        }
        "sl2" => {
            let k = cfg.field_or(FieldCtx::RatFun);
            match what {
                "killing" | "bracket" => {
                    let b = built(BLieAlgebra::new(built(RMatrix::standard_sl2(&k))?))?;
                    if what == "killing" {
                        killing(&mut t, &b)?
                    } else {
                        bracket(&mut t, &b)?
                    }
                }
                _ => {
                    let s = built(Sl2Calculus::new(&k))?;
                    match what {
                        "metric" => metric(&mut t, s.forms(), s.hodge()),
                        "hodge" => map_table(&mut t, s.forms(), |x| s.hodge().hodge(x), "♯x"),
                        _ => algebra_table(&mut t, what, s.forms(), Some(s.hodge().fourier())).ok_or_else(missing)?,
                    }
                }
            }
        }
        "qplane" => {
            let k = cfg.field_or(FieldCtx::RatFun);
            let p = built(PlaneCalculus::quantum_plane(&k, cfg.max_degree.max(2)))?;
            match what {
                "relations" => plane_relations(&mut t, &p)?,
                "dims" => {
                    t.columns = vec!["degree".into(), "coordinates".into(), "forms".into()];
                    for m in 0..=p.coords().built_degree() {
                        let forms = if m <= p.forms().built_degree() { p.forms().dim(m) } else { 0 };
                        t.push(vec![m.into(), p.coords().dim(m).into(), forms.into()]);
                    }
                }
                "braiding" => braiding(&mut t, p.coords().space()),
                _ => return Err(missing()),
            }
        }
        "fermionic" => {
            let f = built(fermionic_plane(&cfg.field_or(FieldCtx::RatFun)))?;
            match what {
                "hodge" => fourier_table(&mut t, &f),
                _ => algebra_table(&mut t, what, f.primal(), Some(&f)).ok_or_else(missing)?,
            }
        }
        _ => {
            let f = built(anyonic_line(2))?;
            match what {
                "hodge" => fourier_table(&mut t, &f),
                _ => algebra_table(&mut t, what, f.primal(), Some(&f)).ok_or_else(missing)?,
            }
        }
    }
    Ok(t)
}

/// Tables read off a Nichols algebra and its Fourier data.
fn algebra_table(t: &mut Table, what: &str, alg: &NicholsAlgebra, f: Option<&FourierCtx>) -> Option<()> {
    match what {
        "dims" => {
            t.columns = vec!["degree".into(), "dim".into()];
            for (m, d) in alg.dims().into_iter().enumerate() {
                t.push(vec![m.into(), d.into()]);
            }
        }
        "relations" => {
            t.columns = vec!["degree".into(), "relation".into()];
            let m = (2..=alg.built_degree() + 1).find(|&m| alg.relations(m).dim() > 0)?;
            for v in alg.relations(m).basis() {
                t.push(vec![m.into(), format!("{} = 0", tensor_string(alg.space(), m, v)).into()]);
            }
        }
        "exp" => {
            let f = f?;
            t.columns = vec!["degree".into(), "row".into(), "col".into(), "value".into()];
            for m in 0..=f.top() {
                let b = f.exp().block(m)?;
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        let c = b.get(i, j);
                        if !c.is_zero() {
                            t.push(vec![m.into(), alg.basis_label(m, i).into(), f.dual().basis_label(m, j).into(), c.into()]);
                        }
                    }
                }
            }
        }
        "antipode" => map_table(t, alg, |x| alg.antipode(x), "S(x)"),
        "braiding" => braiding(t, alg.space()),
        _ => return None,
    }
    Some(())
}

fn basis(alg: &NicholsAlgebra) -> Vec<(usize, usize)> {
    (0..=alg.built_degree()).flat_map(|m| (0..alg.dim(m)).map(move |k| (m, k))).collect()
}

/// One row per basis element with the image under `f`.
fn map_table(t: &mut Table, alg: &NicholsAlgebra, f: impl Fn(&GradedElement) -> GradedElement, head: &str) {
    t.columns = vec!["degree".into(), "x".into(), head.into()];
    for (m, k) in basis(alg) {
        let x = alg.basis_element(m, k);
        t.push(vec![m.into(), alg.basis_label(m, k).into(), alg.format(&f(&x)).into()]);
    }
}

fn fourier_table(t: &mut Table, f: &FourierCtx) {
    t.columns = vec!["degree".into(), "x".into(), "F(x)".into()];
    let alg = f.primal();
    for (m, k) in basis(alg) {
        let x = alg.basis_element(m, k);
        t.push(vec![m.into(), alg.basis_label(m, k).into(), f.dual().format(&f.fourier(&x)).into()]);
    }
}

fn tensor_string(space: &BraidedSpace, n: usize, v: &SparseVec) -> String {
    join_terms(v.iter().map(|(i, c)| format_term(c, &tensor_label(space, i, n))).collect())
}

fn tensor_label(space: &BraidedSpace, i: usize, n: usize) -> String {
    space.digits(i, n).iter().map(|&d| space.labels()[d].as_str()).collect::<Vec<_>>().join("⊗")
}

fn braiding(t: &mut Table, space: &BraidedSpace) {
    t.columns = vec!["x⊗y".into(), "Ψ(x⊗y)".into()];
    for i in 0..space.power_dim(2) {
        let out = space.psi().apply(&SparseVec::unit(i, space.ctx()));
        t.push(vec![tensor_label(space, i, 2).into(), tensor_string(space, 2, &out).into()]);
    }
}

fn metric(t: &mut Table, alg: &NicholsAlgebra, h: &HodgeCtx) {
    t.columns = vec!["x".into(), "y".into(), "g(x,y)".into()];
    let g: &LinMap = h.metric().pairing_matrix();
    for i in 0..g.rows() {
        for j in 0..g.cols() {
            let c = g.get(i, j);
            if !c.is_zero() {
                t.push(vec![alg.basis_label(1, i).into(), alg.basis_label(1, j).into(), c.into()]);
            }
        }
    }
}

fn killing(t: &mut Table, b: &BLieAlgebra) -> Res<()> {
    t.columns = vec!["x".into(), "y".into(), "K(x,y)".into()];
    for (x, y, v) in killing_in_rescaled_basis(b).map_err(TableError::Construction)? {
        t.push(vec![x.into(), y.into(), v.into()]);
    }
    Ok(())
}

fn bracket(t: &mut Table, b: &BLieAlgebra) -> Res<()> {
    t.columns = vec!["x".into(), "y".into(), "[x,y]".into()];
    let r = built(RescaledBasis::new(b.ctx()))?;
    let names: Vec<&str> = r.named().iter().map(|(n, _)| *n).collect();
    for (nx, x) in r.named() {
        for (ny, y) in r.named() {
            let v = built(r.coordinates(&b.bracket(x, y), b.ctx()))?;
            let s = join_terms(v.iter().map(|(i, c)| format_term(c, names[i])).collect());
            t.push(vec![nx.into(), ny.into(), s.into()]);
        }
    }
    Ok(())
}

fn plane_string(p: &PlaneCalculus, x: &PlaneForm, r: usize, deg: usize) -> String {
    let v = x.component(r, deg);
    let dp = p.forms().dim(deg);
    join_terms(
        v.iter()
            .map(|(i, c)| {
                let (a, b) = (p.coords().basis_label(r, i / dp), p.forms().basis_label(deg, i % dp));
                format_term(c, &format!("{a}{b}"))
            })
            .collect(),
    )
}

/// The four exchange relations between coordinates and their differentials.
fn plane_relations(t: &mut Table, p: &PlaneCalculus) -> Res<()> {
    t.columns = vec!["product".into(), "normal order".into()];
    let k = p.ctx();
    let coords = [("x", p.coord(1, 0)), ("y", p.coord(1, 1))];
    let forms = [("dx", p.form(1, SparseVec::unit(0, k))), ("dy", p.form(1, SparseVec::unit(1, k)))];
    for (nf, f) in &forms {
        for (nc, c) in &coords {
            let prod = built(p.mul(f, c))?;
            t.push(vec![format!("{nf}·{nc}").into(), plane_string(p, &prod, 1, 1).into()]);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_hodge_has_twelve_rows() {
        let t = table("s3", "hodge", &SuiteConfig::default()).unwrap();
        assert_eq!(t.rows.len(), 12);
    }

    #[test]
    fn qplane_relations_has_four_rows() {
        let t = table("qplane", "relations", &SuiteConfig::default()).unwrap();
        assert_eq!(t.rows.len(), 4);
    }

    #[test]
    fn unknown_inputs() {
        let cfg = SuiteConfig::default();
        assert_eq!(table("s4", "dims", &cfg), Err(TableError::UnknownExample("s4".into())));
        assert_eq!(table("s3", "spin", &cfg), Err(TableError::UnknownWhat("spin".into())));
        assert!(matches!(table("qplane", "killing", &cfg), Err(TableError::NotAvailable { .. })));
    }
}
