//! Plain-data views for the dump and decompose subcommands.

use serde::Serialize;
use sextic_core::groups::{build_group, char_vn, decompose, GroupName, SubgroupTable};
use sextic_core::invariants::{fundamental_invariants, klein_covering, CoveringKind};
use sextic_core::pipeline::coverings;

use crate::error::{bad, ForgeError};
use crate::suites::format_decomposition;

/// A binary group by the covering it sits over (C2, ..., S4) or by its own
/// name (Q8, BinOcta, C_4, ...). Covering tokens win, so the cyclic group
/// of order 3 is `C_3` while `C3` means its double cover C_6.
pub fn parse_group(s: &str) -> Result<(GroupName, Option<CoveringKind>), ForgeError> {
    if let Some(k) = coverings().into_iter().find(|k| k.token() == s) {
        let g = k.binary_group().map_err(|e| bad(e.to_string()))?;
        return Ok((g, Some(k)));
    }
    GroupName::parse(s).map(|g| (g, None)).map_err(|_| bad(format!("unknown group `{s}`")))
}

pub fn table(name: GroupName) -> Result<SubgroupTable, ForgeError> {
    build_group(name).map_err(|e| bad(e.to_string()))
}

#[derive(Debug, Clone, Serialize)]
pub struct Decomposition {
    pub group: String,
    pub n: usize,
    pub vn: String,
    /// Vₙ ⊗ C² with the natural action on the second factor.
    pub vn_c2: String,
    pub multiplicities: Vec<usize>,
}

pub fn decomposition(name: GroupName, n: usize) -> Result<Decomposition, ForgeError> {
    let g = table(name)?;
    let chi = char_vn(&g, n);
    let m = decompose(&g, &chi).map_err(|e| ForgeError::BadInput(e.to_string()))?;
    let m2 = decompose(&g, &g.product(&chi, &g.natural_character())).map_err(|e| bad(e.to_string()))?;
    Ok(Decomposition {
        group: name.token(),
        n,
        vn: format_decomposition(&g.irrep_labels, &m),
        vn_c2: format_decomposition(&g.irrep_labels, &m2),
        multiplicities: m,
    })
}

pub fn render_table(g: &SubgroupTable) -> String {
    let mut out = format!("{}  order {}\n", g.name.token(), g.order());
    out += &format!("classes: {}\n", g.class_labels.iter().zip(&g.classes).map(|(l, c)| format!("{l} ({})", c.len())).collect::<Vec<_>>().join(", "));
    for (label, row) in g.irrep_labels.iter().zip(&g.char_table) {
        out += &format!("{label:>6}: {}\n", row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | "));
    }
    out += &format!("verify: {}\n", g.verify().map_or_else(|e| e.to_string(), |_| "ok".into()));
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantEntry {
    pub name: String,
    pub degree: usize,
    pub character: String,
    pub form: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoveringDump {
    pub kind: String,
    pub degree: usize,
    pub nu: String,
    pub de: String,
    pub invariant: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantsDump {
    pub group: String,
    pub entries: Vec<InvariantEntry>,
    pub syzygy_residual: String,
    pub covering: Option<CoveringDump>,
}

pub fn invariants(name: GroupName, kind: Option<CoveringKind>) -> Result<InvariantsDump, ForgeError> {
    let g = table(name)?;
    let (entries, residual) = match fundamental_invariants(name) {
        Ok(reg) => (
            reg.entries
                .iter()
                .map(|e| InvariantEntry {
                    name: e.name.clone(),
                    degree: e.form.degree(),
                    character: g.irrep_labels[e.character].clone(),
                    form: e.form.to_string(),
                })
                .collect(),
            reg.syzygy_residual().to_string(),
        ),
        Err(_) if kind.is_some() => (vec![], "-".into()),
        Err(e) => return Err(bad(e.to_string())),
    };
    let covering = match kind {
        Some(k) => {
            let cov = klein_covering(k).map_err(|e| bad(e.to_string()))?;
            Some(CoveringDump {
                kind: k.token(),
                degree: cov.degree,
                nu: cov.nu.to_string(),
                de: cov.de.to_string(),
                invariant: cov.check_invariance(),
            })
        }
        None => None,
    };
    Ok(InvariantsDump { group: name.token(), entries, syzygy_residual: residual, covering })
}
