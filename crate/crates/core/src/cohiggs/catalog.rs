use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ambient spaces whose logarithmic (or meromorphic) tangent bundle is split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "ambient", rename_all = "snake_case")]
pub enum LogTangentDescriptor {
    /// ℙ¹ with `m` marked points.
    P1Points { m: i64 },
    /// ℙⁿ with `m` hyperplanes in general position.
    PnHyperplanes { n: i64, m: i64 },
    /// ℙ¹ × ℙ¹ with `a` lines of type (1,0) and `b` of type (0,1).
    QuadricLines { a: i64, b: i64 },
    /// `T_X(−D)` on the quadric for the divisor of the split example.
    QuadricTMinusD,
    /// ℙ¹ with poles of total order `ell` allowed.
    P1Meromorphic { ell: i64 },
}

/// A resolved tangent bundle: a list of line bundles, each given by its
/// multidegree. `twist` is set for line bundles on ℙ¹.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub descriptor: LogTangentDescriptor,
    pub ambient_dim: usize,
    pub summands: Vec<Vec<i64>>,
    pub labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twist: Option<i64>,
}

fn label(d: &[i64]) -> String {
    let s: Vec<String> = d.iter().map(ToString::to_string).collect();
    format!("O({})", s.join(","))
}

/// Splitting of the logarithmic tangent bundle for a cataloged ambient.
pub fn log_tangent_catalog(desc: &LogTangentDescriptor) -> Result<CatalogEntry> {
    use LogTangentDescriptor::*;
    let (dim, summands, twist) = match *desc {
        P1Points { m } if m >= 0 => (1, vec![vec![2 - m]], Some(2 - m)),
        P1Meromorphic { ell } if ell >= 0 => (1, vec![vec![2 + ell]], Some(2 + ell)),
        PnHyperplanes { n, m } if n >= 1 && (1..=n).contains(&m) => {
            let mut s = vec![vec![0]; (m - 1) as usize];
            s.extend(vec![vec![1]; (n - m + 1) as usize]);
            (n as usize, s, None)
        }
        PnHyperplanes { n, m } if n >= 1 && m == n + 1 => (n as usize, vec![vec![0]; n as usize], None),
        QuadricLines { a, b } if a >= 0 && b >= 0 => (2, vec![vec![2 - a, 0], vec![0, 2 - b]], None),
        QuadricTMinusD => (2, vec![vec![1, 0], vec![-1, 2]], None),
        ref d => return Err(Error::NotCataloged(format!("{d:?}"))),
    };
    let labels = summands.iter().map(|d| label(d)).collect();
    Ok(CatalogEntry { descriptor: desc.clone(), ambient_dim: dim, summands, labels, twist })
}
