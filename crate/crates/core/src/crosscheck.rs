//! Agreement between the structure-constant tables and an independent oracle.

use serde::Serialize;

use crate::algebra::SuperAlgebra;
use crate::error::{Error, Result};
use crate::geometry::{expand_in_basis, jkn_product, lkn_bracket, make_kn_basis, Density, GeometryConfig};
use crate::kernel::{BasisKey, Family, Rational, Scalar, Vector};
use crate::presentations::AlgebraHandle;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub left: BasisKey,
    pub right: BasisKey,
    pub table: String,
    pub oracle: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossCheckReport {
    pub algebra: String,
    pub oracle: String,
    pub window: i64,
    pub pairs_checked: u64,
    pub mismatches: u64,
    pub first_mismatch: Option<Mismatch>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

/// Compares `table(a, b)` with `oracle(a, b)` for every pair of `basis`.
pub fn compare_products(
    algebra: &str,
    oracle_name: &str,
    window: i64,
    basis: &[BasisKey],
    mut table: impl FnMut(&BasisKey, &BasisKey) -> Result<Vector>,
    mut oracle: impl FnMut(&BasisKey, &BasisKey) -> Result<Vector>,
) -> Result<CrossCheckReport> {
    let mut report = CrossCheckReport {
        algebra: algebra.to_string(),
        oracle: oracle_name.to_string(),
        window,
        pairs_checked: 0,
        mismatches: 0,
        first_mismatch: None,
    };
    for a in basis {
        for b in basis {
            let t = table(a, b)?;
            let o = oracle(a, b)?;
            report.pairs_checked += 1;
            if t != o {
                report.mismatches += 1;
                report.first_mismatch.get_or_insert_with(|| Mismatch {
                    left: *a,
                    right: *b,
                    table: t.to_string(),
                    oracle: o.to_string(),
                });
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Copy)]
enum GeoOp {
    Mul,
    Jordan { unital: bool },
    Lie,
}

/// Geometric symbol and scale of a table symbol: `table key = scale * geometric key`.
fn to_geometric(name: &str, k: &BasisKey) -> (BasisKey, Scalar) {
    match (name, k.family) {
        ("K1", Family::L) => (*k, Scalar::half()),
        ("K1", Family::A) | ("AK1", Family::SmallA) => (BasisKey { family: Family::Phi, ..*k }, Scalar::ONE),
        _ => (*k, Scalar::ONE),
    }
}

fn from_geometric(name: &str, k: &BasisKey) -> (BasisKey, Scalar) {
    match (name, k.family) {
        ("K1", Family::L) => (*k, Scalar::from_int(2)),
        ("K1", Family::Phi) => (BasisKey { family: Family::A, ..*k }, Scalar::ONE),
        ("AK1", Family::Phi) => (BasisKey { family: Family::SmallA, ..*k }, Scalar::ONE),
        _ => (*k, Scalar::ONE),
    }
}

/// Checks a puncture-model instance against products of densities.
///
/// Three-puncture instances use `s` from the handle; `AK1`, `K1` and `Witt`
/// use the two-puncture model.
pub fn cross_check_geometry(h: &AlgebraHandle, window: i64) -> Result<CrossCheckReport> {
    let name = h.name().to_string();
    let (cfg, op) = match name.as_str() {
        "A03" | "g03" | "L03" | "J03" | "J03u" => {
            let s: Rational = h
                .param("s")
                .ok_or_else(|| Error::InvalidParameter("missing s".into()))?
                .parse()?;
            let op = match name.as_str() {
                "A03" => GeoOp::Mul,
                "J03" => GeoOp::Jordan { unital: false },
                "J03u" => GeoOp::Jordan { unital: true },
                _ => GeoOp::Lie,
            };
            (GeometryConfig::three(s)?, op)
        }
        "AK1" => (GeometryConfig::two(), GeoOp::Jordan { unital: false }),
        "K1" | "Witt" => (GeometryConfig::two(), GeoOp::Lie),
        other => return Err(Error::Unsupported(format!("{other} has no puncture model"))),
    };
    let density = |k: &BasisKey| -> Result<Density> {
        let (g, c) = to_geometric(&name, k);
        Ok(make_kn_basis(&cfg, &g)?.scale(&c))
    };
    let oracle = |a: &BasisKey, b: &BasisKey| -> Result<Vector> {
        let (u, v) = (density(a)?, density(b)?);
        let d = match op {
            GeoOp::Mul => crate::geometry::density_mul(&u, &v),
            GeoOp::Jordan { unital } => jkn_product(&u, &v, unital)?,
            GeoOp::Lie => lkn_bracket(&u, &v)?,
        };
        let mut out = Vector::zero();
        for (k, c) in &expand_in_basis(&cfg, &d)? {
            let (t, s) = from_geometric(&name, k);
            out.add_term(t, &(c * &s));
        }
        Ok(out)
    };
    compare_products(
        &name,
        &format!("geometry({})", cfg_label(&cfg)),
        window,
        &h.basis(window),
        |a, b| h.mul_basis(a, b),
        oracle,
    )
}

fn cfg_label(cfg: &GeometryConfig) -> String {
    match cfg.sqrt_alpha() {
        Some(s) => format!("three punctures, s = {s}"),
        None => "two punctures".to_string(),
    }
}
