//! Census of all small matroids with their connectivity properties,
//! serialized as ndjson with a fixed field order.

use crate::connectivity::PropertyFlags;
use crate::enumerate::enumerate_matroids;
use crate::error::{input_err, Result};
use crate::iso::CanonicalForm;
use crate::matroid::Matroid;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub cf: CanonicalForm,
    pub n: usize,
    pub r: usize,
    pub flags: PropertyFlags,
}

/// Serialization mirror fixing the ndjson key order.
#[derive(Serialize)]
struct RecordJson<'a> {
    cf: String,
    n: usize,
    r: usize,
    #[serde(rename = "3c")]
    three_connected: bool,
    min3c: bool,
    sm3c: bool,
    brittle: bool,
    triangles: usize,
    triads: usize,
    eit: usize,
    essential: usize,
    #[serde(skip)]
    _marker: std::marker::PhantomData<&'a ()>,
}

impl CensusRecord {
    pub fn json_line(&self) -> String {
        let row = RecordJson {
            cf: self.cf.to_string(),
            n: self.n,
            r: self.r,
            three_connected: self.flags.is_3connected,
            min3c: self.flags.is_min_3connected,
            sm3c: self.flags.is_sm_3connected,
            brittle: self.flags.is_brittle,
            triangles: self.flags.triangle_count,
            triads: self.flags.triad_count,
            eit: self.flags.elements_in_triads,
            essential: self.flags.essential_count,
            _marker: std::marker::PhantomData,
        };
        serde_json::to_string(&row).expect("record serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusFilter {
    ThreeConnected,
    Min3c,
    Sm3c,
    Sm2c,
    Brittle,
    TriangleFree,
}

impl std::str::FromStr for CensusFilter {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<CensusFilter> {
        match s {
            "3connected" => Ok(CensusFilter::ThreeConnected),
            "min3c" => Ok(CensusFilter::Min3c),
            "sm3c" => Ok(CensusFilter::Sm3c),
            "sm2c" => Ok(CensusFilter::Sm2c),
            "brittle" => Ok(CensusFilter::Brittle),
            "trianglefree" => Ok(CensusFilter::TriangleFree),
            other => input_err(format!(
                "unknown filter {other:?}; expected one of 3connected, min3c, sm3c, sm2c, brittle, trianglefree"
            )),
        }
    }
}

impl CensusFilter {
    fn keeps(&self, m: &Matroid, flags: &PropertyFlags) -> Result<bool> {
        Ok(match self {
            CensusFilter::ThreeConnected => flags.is_3connected,
            CensusFilter::Min3c => flags.is_min_3connected,
            CensusFilter::Sm3c => flags.is_sm_3connected,
            CensusFilter::Sm2c => m.is_super_minimally_k_connected(2)?,
            CensusFilter::Brittle => flags.is_brittle,
            CensusFilter::TriangleFree => flags.triangle_count == 0,
        })
    }
}

/// The full census on 0..=n_max elements with a representative matroid per
/// class, sorted by canonical form.
pub fn census_with_matroids(n_max: usize) -> Result<Vec<(CensusRecord, Matroid)>> {
    let classes = enumerate_matroids(n_max)?;
    let mut rows: Vec<(CensusRecord, Matroid)> = classes
        .into_par_iter()
        .map(|(cf, m)| -> Result<(CensusRecord, Matroid)> {
            let flags = PropertyFlags::compute(&m)?;
            let record = CensusRecord { n: cf.n, r: cf.r, cf, flags };
            Ok((record, m))
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| a.0.cf.cmp(&b.0.cf));
    Ok(rows)
}

/// Builds the census of all isomorphism classes on 0..=n_max elements,
/// sorted by canonical form. A filter keeps matching classes and drops the
/// empty matroid, which satisfies connectivity predicates only vacuously.
pub fn census(n_max: usize, filter: Option<CensusFilter>) -> Result<Vec<CensusRecord>> {
    let rows = census_with_matroids(n_max)?;
    let mut records = Vec::with_capacity(rows.len());
    for (record, m) in rows {
        if let Some(f) = filter {
            if record.n == 0 || !f.keeps(&m, &record.flags)? {
                continue;
            }
        }
        records.push(record);
    }
    Ok(records)
}
