//! Simple objects of `Mod(Vect_G)` and fusion tables of module 2-categories.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fusion::{self, FPData, FusionRing};
use crate::groups::{
    class_label, enumerate_subgroups, h2_classes, CharDescriptor, ElementNames, FiniteAbelianGroup,
    H2Class, Subgroup,
};
use crate::intmat::gcd;

/// An indecomposable module category `M(H, ψ)` over `Vect_G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SimpleJson")]
pub struct ModuleSimple {
    pub subgroup: Subgroup,
    pub class: H2Class,
    pub label: String,
}

#[derive(Deserialize)]
struct ClassJson {
    residues: Vec<u64>,
    moduli: Vec<u64>,
}

#[derive(Deserialize)]
struct SimpleJson {
    subgroup: Subgroup,
    class: ClassJson,
    label: String,
}

impl TryFrom<SimpleJson> for ModuleSimple {
    type Error = Error;
    fn try_from(j: SimpleJson) -> Result<Self> {
        let class = H2Class::from_parts(&j.subgroup, &j.class.residues, &j.class.moduli)?;
        Ok(ModuleSimple {
            subgroup: j.subgroup,
            class,
            label: j.label,
        })
    }
}

impl ModuleSimple {
    /// The label with a trivial class suppressed: `⟨3⟩` rather than `(⟨3⟩,triv)`.
    pub fn short_label(&self, names: &ElementNames) -> String {
        let h = names.subgroup_label(&self.subgroup);
        if self.class.is_trivial() {
            h
        } else {
            format!("({h},{})", class_label(&self.class))
        }
    }
}

/// Associator on `Vect_G`, given as residues of a 3-cocycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Associator {
    Trivial,
    Cocycle(Vec<u64>),
}

pub fn classify_module_simples(
    g: &FiniteAbelianGroup,
    k: CharDescriptor,
) -> Result<Vec<ModuleSimple>> {
    classify_module_simples_named(g, k, &ElementNames::default())
}

/// Pairs `(H, ψ)` ordered by subgroup then class. In characteristic `p` only
/// subgroups of order prime to `p` appear, since `k_ψ[H]` must be semisimple.
pub fn classify_module_simples_named(
    g: &FiniteAbelianGroup,
    k: CharDescriptor,
    names: &ElementNames,
) -> Result<Vec<ModuleSimple>> {
    let mut out = Vec::new();
    for h in enumerate_subgroups(g)? {
        if k.divides(h.order()) {
            continue;
        }
        let h_label = names.subgroup_label(&h);
        for class in h2_classes(&h, k)? {
            let label = format!("({h_label},{})", class_label(&class));
            out.push(ModuleSimple {
                subgroup: h.clone(),
                class,
                label,
            });
        }
    }
    Ok(out)
}

pub fn classify_with_associator(
    g: &FiniteAbelianGroup,
    k: CharDescriptor,
    omega: &Associator,
) -> Result<Vec<ModuleSimple>> {
    match omega {
        Associator::Cocycle(r) if r.iter().any(|&x| x != 0) => Err(Error::Unsupported(
            "module categories over Vect_G with a nontrivial associator".into(),
        )),
        _ => classify_module_simples(g, k),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Completeness {
    Complete,
    ImageOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateStatus {
    Certified,
    NotCertified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationCertificate {
    pub status: CertificateStatus,
    pub reason: String,
}

impl FactorizationCertificate {
    pub fn is_certified(&self) -> bool {
        self.status == CertificateStatus::Certified
    }
}

/// Certified exactly when both totals are certified integers and coprime.
pub fn factorization_certificate(f: &FPData, g: &FPData) -> FactorizationCertificate {
    match (f.integral_total(), g.integral_total()) {
        (Some(a), Some(b)) => {
            let d = gcd(a, b);
            let status = if d == 1 {
                CertificateStatus::Certified
            } else {
                CertificateStatus::NotCertified
            };
            FactorizationCertificate {
                status,
                reason: format!("gcd {d}"),
            }
        }
        _ => FactorizationCertificate {
            status: CertificateStatus::NotCertified,
            reason: "non-integer FP dimension".into(),
        },
    }
}

/// Fusion table of a module 2-category under the relative product.
///
/// `group_orders` records the pointed base category `Vect_G`; when present
/// its FP dimension `|G|` is used by the coprimality certificate, otherwise
/// the table's own FP data is.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "TableJson", into = "TableJson")]
pub struct ModuleFusionTable {
    pub ring: FusionRing,
    pub provenance: String,
    pub group_orders: Vec<u64>,
    pub completeness: Completeness,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    #[serde(flatten)]
    ring: FusionRing,
    provenance: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    group_orders: Vec<u64>,
    completeness: Completeness,
}

impl TryFrom<TableJson> for ModuleFusionTable {
    type Error = Error;
    fn try_from(j: TableJson) -> Result<Self> {
        ModuleFusionTable::new(j.ring, j.provenance, j.group_orders, j.completeness)
    }
}

impl From<ModuleFusionTable> for TableJson {
    fn from(t: ModuleFusionTable) -> Self {
        TableJson {
            ring: t.ring,
            provenance: t.provenance,
            group_orders: t.group_orders,
            completeness: t.completeness,
        }
    }
}

impl ModuleFusionTable {
    pub fn new(
        ring: FusionRing,
        provenance: impl Into<String>,
        group_orders: Vec<u64>,
        completeness: Completeness,
    ) -> Result<Self> {
        let report = ring.validate();
        if !report.is_ok() {
            return Err(Error::Malformed(format!(
                "module table fails the ring axioms: {report}"
            )));
        }
        if let Some(&o) = group_orders.iter().find(|&&o| o < 2) {
            return Err(Error::InvalidOrder(o));
        }
        Ok(ModuleFusionTable {
            ring,
            provenance: provenance.into(),
            group_orders,
            completeness,
        })
    }

    /// FP data used by the certificate.
    pub fn base_fp(&self) -> Result<FPData> {
        if self.group_orders.is_empty() {
            fusion::fp_data(&self.ring)
        } else {
            Ok(FPData::pointed(self.group_orders.iter().product()))
        }
    }
}

/// Product table; complete only when both inputs are and their base FP
/// dimensions are certified coprime.
pub fn module_table_product(
    t: &ModuleFusionTable,
    u: &ModuleFusionTable,
) -> Result<ModuleFusionTable> {
    let ring = fusion::deligne_product(&t.ring, &u.ring)?;
    let certificate = factorization_certificate(&t.base_fp()?, &u.base_fp()?);
    let complete = certificate.is_certified()
        && t.completeness == Completeness::Complete
        && u.completeness == Completeness::Complete;
    Ok(ModuleFusionTable {
        ring,
        provenance: format!("{} ⊠ {}", t.provenance, u.provenance),
        group_orders: t
            .group_orders
            .iter()
            .chain(&u.group_orders)
            .copied()
            .collect(),
        completeness: if complete {
            Completeness::Complete
        } else {
            Completeness::ImageOnly
        },
    })
}

pub fn render_table(t: &ModuleFusionTable) -> String {
    t.ring.render_text("⊠")
}
