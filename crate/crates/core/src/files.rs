//! Interchange formats: JSON files with exact scalars as strings and sparse
//! tensors as `[i1, …, ik, "coef"]` entry lists with 0-based indices. Leg
//! addressing is row-major throughout, the first leg varying slowest.
//! Emission is canonical (fixed key order, two-space indentation, trailing
//! newline) so round-trips are byte-identical.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{ActionTable, FiniteAlgebra, MulTable};
use crate::comodule::ComoduleAlgebra;
use crate::error::{Error, Result};
use crate::linmap::LinearMap;
use crate::module_algebra::ModuleAlgebra;
use crate::quasihopf::{QuasiBialgebra, QuasiHopfAlgebra};
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor;

pub const ALGEBRA_FORMAT: &str = "quasihopf-algebra/v1";
pub const FINITE_ALGEBRA_FORMAT: &str = "quasihopf-finite-algebra/v1";
pub const MODULE_ALGEBRA_FORMAT: &str = "quasihopf-module-algebra/v1";
pub const COMODULE_ALGEBRA_FORMAT: &str = "quasihopf-comodule-algebra/v1";
pub const GAUGE_FORMAT: &str = "quasihopf-gauge/v1";
pub const CATALOG_FORMAT: &str = "quasihopf-catalog/v1";
pub const REPORT_FORMAT: &str = "quasihopf-report/v1";

/// One sparse tensor entry `[i1, …, ik, "coef"]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseEntry {
    pub indices: Vec<usize>,
    pub coeff: String,
}

impl Serialize for SparseEntry {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.indices.len() + 1))?;
        for i in &self.indices {
            seq.serialize_element(i)?;
        }
        seq.serialize_element(&self.coeff)?;
        seq.end()
    }
}

impl<'de> Deserialize<'de> for SparseEntry {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct EntryVisitor;

        impl<'de> Visitor<'de> for EntryVisitor {
            type Value = SparseEntry;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a sparse entry [i1, …, ik, \"coef\"]")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<SparseEntry, A::Error> {
                let mut indices = Vec::new();
                let mut coeff: Option<String> = None;
                while let Some(v) = seq.next_element::<serde_json::Value>()? {
                    match v {
                        serde_json::Value::Number(n) => {
                            if coeff.is_some() {
                                return Err(serde::de::Error::custom(
                                    "index after coefficient in sparse entry",
                                ));
                            }
                            let i = n.as_u64().ok_or_else(|| {
                                serde::de::Error::custom("sparse index must be a nonnegative integer")
                            })?;
                            indices.push(i as usize);
                        }
                        serde_json::Value::String(s) => {
                            if coeff.is_some() {
                                return Err(serde::de::Error::custom(
                                    "multiple coefficients in sparse entry",
                                ));
                            }
                            coeff = Some(s);
                        }
                        _ => {
                            return Err(serde::de::Error::custom(
                                "sparse entry holds indices and one coefficient string",
                            ))
                        }
                    }
                }
                let coeff =
                    coeff.ok_or_else(|| serde::de::Error::custom("missing coefficient"))?;
                Ok(SparseEntry { indices, coeff })
            }
        }

        deserializer.deserialize_seq(EntryVisitor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub format: String,
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    /// `mul[i][j]` = coordinates of `e_i e_j`.
    pub mul: Vec<Vec<Vec<String>>>,
    /// `comul[i]` = dense coordinates of `Δ(e_i)` in `H⊗H`.
    pub comul: Vec<Vec<String>>,
    pub counit: Vec<String>,
    pub phi: Vec<SparseEntry>,
    pub phi_inv: Vec<SparseEntry>,
    /// `antipode[i]` = coordinates of `S(e_i)`.
    pub antipode: Vec<Vec<String>>,
    pub alpha: Vec<String>,
    pub beta: Vec<String>,
}

/// A bare associative algebra, e.g. an exported smash product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteAlgebraFile {
    pub format: String,
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub mul: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleAlgebraFile {
    pub format: String,
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub mul: Vec<Vec<Vec<String>>>,
    /// `action[h][a]` = coordinates of `e_h · e_a`.
    pub action: Vec<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComoduleAlgebraFile {
    pub format: String,
    pub field: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub mul: Vec<Vec<Vec<String>>>,
    /// Sparse entries `[a, a0, h1, "coef"]` of `ρ(e_a)`.
    pub rho: Vec<SparseEntry>,
    pub phi_rho: Vec<SparseEntry>,
    pub phi_rho_inv: Vec<SparseEntry>,
    /// Optional identification of the comodule algebra inside `H`
    /// (`embedding[i]` = coordinates of the image of `e_i`).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub embedding: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaugeFile {
    pub format: String,
    pub field: String,
    pub dim: usize,
    pub entries: Vec<SparseEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralExpected {
    pub t: Vec<String>,
    pub integral_dim: usize,
    pub gamma: Vec<String>,
    pub lambda: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub integral: Option<IntegralExpected>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub flags: Option<BTreeMap<String, bool>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub format: String,
    pub name: String,
    pub field: String,
    pub hopf: AlgebraFile,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub module_algebra: Option<ModuleAlgebraFile>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub comodule: Option<ComoduleAlgebraFile>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gauge: Option<GaugeFile>,
    pub expected: Expected,
}

/// Canonical emission: pretty JSON with a trailing newline.
pub fn emit<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

fn scalar_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn parse_vec(field: Field, v: &[String], context: &str, dim: usize) -> Result<Vec<Scalar>> {
    if v.len() != dim {
        return Err(Error::Format(format!(
            "{context}: expected {dim} coordinates, got {}",
            v.len()
        )));
    }
    v.iter()
        .map(|s| {
            field.parse(s).map_err(|e| match e {
                Error::DivisionByZero => {
                    Error::Format(format!("{context}: division by zero in scalar"))
                }
                other => Error::Format(format!("{context}: {other}")),
            })
        })
        .collect()
}

fn sparse_to_tensor(
    field: Field,
    dims: &[usize],
    entries: &[SparseEntry],
    context: &str,
) -> Result<Tensor> {
    let mut t = Tensor::zeros(field, dims);
    for e in entries {
        if e.indices.len() != dims.len() {
            return Err(Error::Format(format!(
                "{context}: entry arity {} does not match rank {}",
                e.indices.len(),
                dims.len()
            )));
        }
        for (i, d) in e.indices.iter().zip(dims) {
            if i >= d {
                return Err(Error::Format(format!(
                    "{context}: index {i} out of range for leg of dimension {d}"
                )));
            }
        }
        let c = field.parse(&e.coeff).map_err(|err| match err {
            Error::DivisionByZero => {
                Error::Format(format!("{context}: division by zero in scalar"))
            }
            other => Error::Format(format!("{context}: {other}")),
        })?;
        t.set(&e.indices, c);
    }
    Ok(t)
}

/// Sparse entry list of a tensor, the interchange form used by golden files.
pub fn tensor_to_sparse(t: &Tensor) -> Vec<SparseEntry> {
    t.iter_sparse()
        .map(|(indices, c)| SparseEntry {
            indices,
            coeff: c.to_string(),
        })
        .collect()
}

pub fn finite_algebra_to_file(a: &FiniteAlgebra, basis: &[String]) -> FiniteAlgebraFile {
    FiniteAlgebraFile {
        format: FINITE_ALGEBRA_FORMAT.to_string(),
        field: a.field().to_string(),
        dim: a.dim(),
        basis: basis.to_vec(),
        unit: scalar_strings(&a.unit),
        mul: mul_to_rows(&a.mul),
    }
}

pub fn finite_algebra_from_file(file: &FiniteAlgebraFile) -> Result<FiniteAlgebra> {
    if file.format != FINITE_ALGEBRA_FORMAT {
        return Err(Error::Format(format!(
            "unexpected format {:?}, expected {FINITE_ALGEBRA_FORMAT:?}",
            file.format
        )));
    }
    let field: Field = file.field.parse()?;
    let unit = parse_vec(field, &file.unit, "unit", file.dim)?;
    let mul = mul_from_rows(field, file.dim, &file.mul, "mul")?;
    FiniteAlgebra::new(mul, unit)
}

fn mul_to_rows(mul: &MulTable) -> Vec<Vec<Vec<String>>> {
    let n = mul.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| scalar_strings(&mul.basis_product_dense(i, j)))
                .collect()
        })
        .collect()
}

fn mul_from_rows(
    field: Field,
    dim: usize,
    rows: &[Vec<Vec<String>>],
    context: &str,
) -> Result<MulTable> {
    if rows.len() != dim {
        return Err(Error::Format(format!(
            "{context}: multiplication table has {} rows, expected {dim}",
            rows.len()
        )));
    }
    let mut products = Vec::with_capacity(dim * dim);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(Error::Format(format!(
                "{context}: multiplication row {i} has arity {}, expected {dim}",
                row.len()
            )));
        }
        for (j, p) in row.iter().enumerate() {
            products.push(parse_vec(
                field,
                p,
                &format!("{context}: product ({i}, {j})"),
                dim,
            )?);
        }
    }
    MulTable::from_products(field, dim, &products)
}

/// Serializes a quasi-Hopf algebra with the given basis names.
pub fn hopf_to_file(h: &QuasiHopfAlgebra, basis: &[String]) -> AlgebraFile {
    let n = h.dim();
    AlgebraFile {
        format: ALGEBRA_FORMAT.to_string(),
        field: h.field().to_string(),
        dim: n,
        basis: basis.to_vec(),
        unit: scalar_strings(h.unit()),
        mul: mul_to_rows(&h.algebra.mul),
        comul: (0..n)
            .map(|j| scalar_strings(&h.comul.column(j)))
            .collect(),
        counit: (0..n)
            .map(|j| h.counit_of(&h.basis_vector(j)).to_string())
            .collect(),
        phi: tensor_to_sparse(&h.phi),
        phi_inv: tensor_to_sparse(&h.phi_inv),
        antipode: (0..n)
            .map(|j| scalar_strings(&h.antipode.column(j)))
            .collect(),
        alpha: scalar_strings(&h.alpha),
        beta: scalar_strings(&h.beta),
    }
}

/// Parses and cross-validates an algebra file, optionally overriding its
/// field when the coefficients permit.
pub fn hopf_from_file(file: &AlgebraFile, field_override: Option<Field>) -> Result<QuasiHopfAlgebra> {
    if file.format != ALGEBRA_FORMAT {
        return Err(Error::Format(format!(
            "unexpected format {:?}, expected {ALGEBRA_FORMAT:?}",
            file.format
        )));
    }
    let field = match field_override {
        Some(f) => f,
        None => file.field.parse()?,
    };
    field.check_prime()?;
    let n = file.dim;
    if file.basis.len() != n {
        return Err(Error::Format(format!(
            "basis: expected {n} names, got {}",
            file.basis.len()
        )));
    }
    let unit = parse_vec(field, &file.unit, "unit", n)?;
    let mul = mul_from_rows(field, n, &file.mul, "mul")?;
    let algebra = FiniteAlgebra::new(mul, unit)?;
    if file.comul.len() != n {
        return Err(Error::Format(format!(
            "comul: expected {n} columns, got {}",
            file.comul.len()
        )));
    }
    let comul_cols: Vec<Vec<Scalar>> = file
        .comul
        .iter()
        .enumerate()
        .map(|(j, col)| parse_vec(field, col, &format!("comul[{j}]"), n * n))
        .collect::<Result<_>>()?;
    let comul = LinearMap::from_columns(field, n * n, &comul_cols);
    let counit_vals = parse_vec(field, &file.counit, "counit", n)?;
    let mut counit = LinearMap::zeros(field, 1, n);
    for (j, v) in counit_vals.into_iter().enumerate() {
        counit.set(0, j, v);
    }
    let phi = sparse_to_tensor(field, &[n, n, n], &file.phi, "phi")?;
    let phi_inv = sparse_to_tensor(field, &[n, n, n], &file.phi_inv, "phi_inv")?;
    let antipode_cols: Vec<Vec<Scalar>> = file
        .antipode
        .iter()
        .enumerate()
        .map(|(j, col)| parse_vec(field, col, &format!("antipode[{j}]"), n))
        .collect::<Result<_>>()?;
    if antipode_cols.len() != n {
        return Err(Error::Format(format!(
            "antipode: expected {n} images, got {}",
            antipode_cols.len()
        )));
    }
    let antipode = LinearMap::from_columns(field, n, &antipode_cols);
    let alpha = parse_vec(field, &file.alpha, "alpha", n)?;
    let beta = parse_vec(field, &file.beta, "beta", n)?;
    let bialgebra = QuasiBialgebra::new(algebra, comul, counit, phi, phi_inv)?;
    QuasiHopfAlgebra::new(bialgebra, antipode, alpha, beta)
}

pub fn module_algebra_to_file(
    h: &QuasiHopfAlgebra,
    a: &ModuleAlgebra,
    basis: &[String],
) -> ModuleAlgebraFile {
    let m = a.dim();
    let n = h.dim();
    ModuleAlgebraFile {
        format: MODULE_ALGEBRA_FORMAT.to_string(),
        field: h.field().to_string(),
        dim: m,
        basis: basis.to_vec(),
        unit: scalar_strings(&a.unit),
        mul: mul_to_rows(&a.mul),
        action: (0..n)
            .map(|hi| {
                (0..m)
                    .map(|ai| {
                        scalar_strings(
                            &a.action
                                .basis_act(hi, ai)
                                .iter()
                                .fold(vec![h.field().zero(); m], |mut acc, (k, c)| {
                                    acc[*k] = c.clone();
                                    acc
                                }),
                        )
                    })
                    .collect()
            })
            .collect(),
    }
}

pub fn module_algebra_from_file(
    file: &ModuleAlgebraFile,
    h: &QuasiHopfAlgebra,
) -> Result<ModuleAlgebra> {
    if file.format != MODULE_ALGEBRA_FORMAT {
        return Err(Error::Format(format!(
            "unexpected format {:?}, expected {MODULE_ALGEBRA_FORMAT:?}",
            file.format
        )));
    }
    let field: Field = file.field.parse()?;
    if field != h.field() {
        return Err(Error::FieldMismatch(field, h.field()));
    }
    let m = file.dim;
    let n = h.dim();
    let unit = parse_vec(field, &file.unit, "unit", m)?;
    let mul = mul_from_rows(field, m, &file.mul, "mul")?;
    if file.action.len() != n {
        return Err(Error::Format(format!(
            "action: expected {n} actor rows, got {}",
            file.action.len()
        )));
    }
    let mut products = Vec::with_capacity(n * m);
    for (hi, row) in file.action.iter().enumerate() {
        if row.len() != m {
            return Err(Error::Format(format!(
                "action[{hi}]: expected {m} entries, got {}",
                row.len()
            )));
        }
        for (ai, p) in row.iter().enumerate() {
            products.push(parse_vec(
                field,
                p,
                &format!("action ({hi}, {ai})"),
                m,
            )?);
        }
    }
    let action = ActionTable::from_products(field, n, m, &products)?;
    ModuleAlgebra::new(mul, unit, action)
}

pub fn comodule_to_file(
    h: &QuasiHopfAlgebra,
    c: &ComoduleAlgebra,
    basis: &[String],
) -> ComoduleAlgebraFile {
    let m = c.dim();
    let n = h.dim();
    let mut rho_entries = Vec::new();
    for a in 0..m {
        let col = c.rho.column(a);
        for (k, v) in col.iter().enumerate() {
            if !v.is_zero() {
                rho_entries.push(SparseEntry {
                    indices: vec![a, k / n, k % n],
                    coeff: v.to_string(),
                });
            }
        }
    }
    ComoduleAlgebraFile {
        format: COMODULE_ALGEBRA_FORMAT.to_string(),
        field: h.field().to_string(),
        dim: m,
        basis: basis.to_vec(),
        unit: scalar_strings(&c.algebra.unit),
        mul: mul_to_rows(&c.algebra.mul),
        rho: rho_entries,
        phi_rho: tensor_to_sparse(&c.phi_rho),
        phi_rho_inv: tensor_to_sparse(&c.phi_rho_inv),
        embedding: c.embedding.as_ref().map(|e| {
            (0..m).map(|j| scalar_strings(&e.column(j))).collect()
        }),
    }
}

pub fn comodule_from_file(
    file: &ComoduleAlgebraFile,
    h: &QuasiHopfAlgebra,
) -> Result<ComoduleAlgebra> {
    if file.format != COMODULE_ALGEBRA_FORMAT {
        return Err(Error::Format(format!(
            "unexpected format {:?}, expected {COMODULE_ALGEBRA_FORMAT:?}",
            file.format
        )));
    }
    let field: Field = file.field.parse()?;
    if field != h.field() {
        return Err(Error::FieldMismatch(field, h.field()));
    }
    let m = file.dim;
    let n = h.dim();
    let unit = parse_vec(field, &file.unit, "unit", m)?;
    let mul = mul_from_rows(field, m, &file.mul, "mul")?;
    let algebra = FiniteAlgebra::new(mul, unit)?;
    let mut rho = LinearMap::zeros(field, m * n, m);
    for e in &file.rho {
        if e.indices.len() != 3 {
            return Err(Error::Format(
                "rho: entries are [a, a0, h1, coeff]".to_string(),
            ));
        }
        let (a, a0, h1) = (e.indices[0], e.indices[1], e.indices[2]);
        if a >= m || a0 >= m || h1 >= n {
            return Err(Error::Format(format!(
                "rho: entry ({a}, {a0}, {h1}) out of range"
            )));
        }
        let c = field.parse(&e.coeff)?;
        rho.set(a0 * n + h1, a, c);
    }
    let phi_rho = sparse_to_tensor(field, &[m, n, n], &file.phi_rho, "phi_rho")?;
    let phi_rho_inv = sparse_to_tensor(field, &[m, n, n], &file.phi_rho_inv, "phi_rho_inv")?;
    let embedding = match &file.embedding {
        None => None,
        Some(cols) => {
            if cols.len() != m {
                return Err(Error::Format(format!(
                    "embedding: expected {m} images, got {}",
                    cols.len()
                )));
            }
            let parsed: Vec<Vec<Scalar>> = cols
                .iter()
                .enumerate()
                .map(|(j, col)| parse_vec(field, col, &format!("embedding[{j}]"), n))
                .collect::<Result<_>>()?;
            Some(LinearMap::from_columns(field, n, &parsed))
        }
    };
    ComoduleAlgebra::new(algebra, rho, phi_rho, phi_rho_inv, embedding)
}

pub fn gauge_to_file(h: &QuasiHopfAlgebra, f: &Tensor) -> GaugeFile {
    GaugeFile {
        format: GAUGE_FORMAT.to_string(),
        field: h.field().to_string(),
        dim: h.dim(),
        entries: tensor_to_sparse(f),
    }
}

pub fn gauge_from_file(file: &GaugeFile, h: &QuasiHopfAlgebra) -> Result<Tensor> {
    if file.format != GAUGE_FORMAT {
        return Err(Error::Format(format!(
            "unexpected format {:?}, expected {GAUGE_FORMAT:?}",
            file.format
        )));
    }
    let field: Field = file.field.parse()?;
    if field != h.field() {
        return Err(Error::FieldMismatch(field, h.field()));
    }
    if file.dim != h.dim() {
        return Err(Error::Format(format!(
            "gauge: dimension {} does not match the algebra dimension {}",
            file.dim,
            h.dim()
        )));
    }
    sparse_to_tensor(field, &[h.dim(), h.dim()], &file.entries, "gauge")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::quasihopf::verify_quasi_hopf;

    #[test]
    fn hopf_round_trip_is_byte_identical() {
        for name in ["KZ2", "H2TW", "SW4"] {
            let h = catalog::quasi_hopf(name, Field::Rational).unwrap();
            let basis: Vec<String> = (0..h.dim()).map(|i| format!("e{i}")).collect();
            let file = hopf_to_file(&h, &basis);
            let text = emit(&file);
            let parsed: AlgebraFile = serde_json::from_str(&text).unwrap();
            assert_eq!(emit(&parsed), text, "{name}");
            let back = hopf_from_file(&parsed, None).unwrap();
            assert!(verify_quasi_hopf(&back, name).all_passed());
            assert_eq!(back, h);
        }
    }

    #[test]
    fn bad_scalar_is_reported_with_its_field_path() {
        let h = catalog::kz2(Field::Rational).unwrap();
        let basis = vec!["1".to_string(), "g".to_string()];
        let mut file = hopf_to_file(&h, &basis);
        file.alpha[0] = "1/0".to_string();
        let err = hopf_from_file(&file, None).unwrap_err();
        assert!(
            err.to_string().contains("alpha") && err.to_string().contains("division by zero"),
            "{err}"
        );
    }

    #[test]
    fn wrong_arity_is_reported_with_the_field_name() {
        let h = catalog::kz2(Field::Rational).unwrap();
        let basis = vec!["1".to_string(), "g".to_string()];
        let mut file = hopf_to_file(&h, &basis);
        file.mul[0].pop();
        let err = hopf_from_file(&file, None).unwrap_err();
        assert!(err.to_string().contains("mul"), "{err}");
    }

    #[test]
    fn field_override_moves_kz2_to_f2() {
        let h = catalog::kz2(Field::Rational).unwrap();
        let basis = vec!["1".to_string(), "g".to_string()];
        let file = hopf_to_file(&h, &basis);
        let over = hopf_from_file(&file, Some(Field::Fp(2))).unwrap();
        assert_eq!(over.field(), Field::Fp(2));
        assert!(verify_quasi_hopf(&over, "KZ2/F2").all_passed());
    }

    #[test]
    fn smash_products_round_trip_as_plain_algebras() {
        let h = catalog::kz2(Field::Rational).unwrap();
        let a = catalog::trivial_module_algebra(&h).unwrap();
        let (smash, _) = crate::module_algebra::smash_product(&h, &a).unwrap();
        let basis: Vec<String> = (0..smash.dim()).map(|i| format!("s{i}")).collect();
        let file = finite_algebra_to_file(&smash.algebra, &basis);
        let text = emit(&file);
        let parsed: FiniteAlgebraFile = serde_json::from_str(&text).unwrap();
        assert_eq!(emit(&parsed), text);
        let back = finite_algebra_from_file(&parsed).unwrap();
        assert_eq!(back, smash.algebra);
        assert!(back.verify("smash").all_passed());
    }

    #[test]
    fn derived_elements_freeze_as_sparse_golden_entries() {
        let h = catalog::h2tw(Field::Rational).unwrap();
        let pq = crate::derived::compute_pq(&h).unwrap();
        let entries = tensor_to_sparse(&pq.p_l);
        let json = serde_json::to_string(&entries).unwrap();
        // p_L = 1⊗1 − 2p⊗p with p = (1−g)/2.
        assert_eq!(
            json,
            "[[0,0,\"1/2\"],[0,1,\"1/2\"],[1,0,\"1/2\"],[1,1,\"-1/2\"]]"
        );
    }

    #[test]
    fn sparse_entries_serialize_as_mixed_arrays() {
        let e = SparseEntry {
            indices: vec![0, 1, 0],
            coeff: "-1/4".to_string(),
        };
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(s, "[0,1,0,\"-1/4\"]");
        let back: SparseEntry = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
    }
}
