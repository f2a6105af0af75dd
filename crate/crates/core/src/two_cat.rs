//! Component-level models of compact semisimple 2-categories.
//!
//! Each connected component is represented by the fusion ring of the
//! endomorphism category of one of its simple objects. Over ℝ a component
//! also carries the semisimple algebra its unit endomorphisms form.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::algebra::{self, DivisionTag, FieldDescriptor, SemisimpleAlgebra};
use crate::error::{Error, Result};
use crate::fusion::{self, FPData, FusionRing};
use crate::groups::{CharDescriptor, FiniteAbelianGroup};
use crate::modules::{classify_module_simples, factorization_certificate};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ComponentJson", into = "ComponentJson")]
pub struct Component2Cat {
    pub id: String,
    pub endo_ring: FusionRing,
    pub fp: FPData,
    pub real_model: Option<SemisimpleAlgebra>,
}

#[derive(Serialize, Deserialize)]
struct ComponentJson {
    id: String,
    endo_ring: FusionRing,
    // recomputed on load
    #[serde(default, skip_deserializing)]
    fp: Option<FPData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    real_model: Option<SemisimpleAlgebra>,
}

impl TryFrom<ComponentJson> for Component2Cat {
    type Error = Error;
    fn try_from(j: ComponentJson) -> Result<Self> {
        Component2Cat::new(j.id, j.endo_ring, j.real_model)
    }
}

impl From<Component2Cat> for ComponentJson {
    fn from(c: Component2Cat) -> Self {
        ComponentJson {
            id: c.id,
            endo_ring: c.endo_ring,
            fp: Some(c.fp),
            real_model: c.real_model,
        }
    }
}

impl Component2Cat {
    pub fn new(
        id: impl Into<String>,
        endo_ring: FusionRing,
        real_model: Option<SemisimpleAlgebra>,
    ) -> Result<Self> {
        let id = id.into();
        if endo_ring.unit().len() != 1 {
            return Err(Error::Malformed(format!(
                "component {id}: endomorphism ring must have a simple unit"
            )));
        }
        let fp = fusion::fp_data(&endo_ring)?;
        Ok(Component2Cat {
            id,
            endo_ring,
            fp,
            real_model,
        })
    }

    /// `Mod(Vect_D)` when the component is that of a division algebra `D`,
    /// otherwise the id.
    pub fn describe(&self) -> String {
        match self.real_model.as_ref().map(|a| a.factors()) {
            Some(&[(_, d)]) if self.endo_ring.rank() == 1 => format!("Mod(Vect_{})", d.symbol()),
            _ => self.id.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleEntry {
    pub label: String,
    pub component: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ModelJson", into = "ModelJson")]
pub struct Compact2CatModel {
    pub field: FieldDescriptor,
    pub components: Vec<Component2Cat>,
    pub simples: Vec<SimpleEntry>,
    pub hom_counts: Option<Vec<Vec<u64>>>,
    /// Components containing a summand of the unit object.
    pub unit: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ModelJson {
    field: FieldDescriptor,
    components: Vec<Component2Cat>,
    #[serde(default)]
    simples: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hom_counts: Option<Vec<Vec<u64>>>,
    #[serde(default)]
    unit: Vec<String>,
}

impl TryFrom<ModelJson> for Compact2CatModel {
    type Error = Error;
    fn try_from(j: ModelJson) -> Result<Self> {
        let simples = j
            .simples
            .into_iter()
            .map(|(label, component)| SimpleEntry { label, component })
            .collect();
        Compact2CatModel::new(j.field, j.components, simples, j.hom_counts, j.unit)
    }
}

impl From<Compact2CatModel> for ModelJson {
    fn from(m: Compact2CatModel) -> Self {
        ModelJson {
            field: m.field,
            components: m.components,
            simples: m
                .simples
                .into_iter()
                .map(|s| (s.label, s.component))
                .collect(),
            hom_counts: m.hom_counts,
            unit: m.unit,
        }
    }
}

impl Compact2CatModel {
    pub fn new(
        field: FieldDescriptor,
        components: Vec<Component2Cat>,
        simples: Vec<SimpleEntry>,
        hom_counts: Option<Vec<Vec<u64>>>,
        unit: Vec<String>,
    ) -> Result<Self> {
        let model = Compact2CatModel {
            field,
            components,
            simples,
            hom_counts,
            unit,
        };
        model.check()?;
        Ok(model)
    }

    fn check(&self) -> Result<()> {
        let mut ids = HashSet::new();
        for c in &self.components {
            if !ids.insert(c.id.as_str()) {
                return Err(Error::Malformed(format!("duplicate component id {}", c.id)));
            }
            if self.field.is_real() {
                match &c.real_model {
                    None => return Err(Error::MissingRealModel(c.id.clone())),
                    Some(a) if a.field() != self.field => {
                        return Err(Error::FieldMismatch {
                            left: self.field.to_string(),
                            right: a.field().to_string(),
                        })
                    }
                    _ => {}
                }
            }
        }
        let mut labels = HashSet::new();
        for s in &self.simples {
            if !ids.contains(s.component.as_str()) {
                return Err(Error::Malformed(format!(
                    "simple {} names unknown component {}",
                    s.label, s.component
                )));
            }
            if !labels.insert(s.label.as_str()) {
                return Err(Error::Malformed(format!(
                    "duplicate simple label {}",
                    s.label
                )));
            }
        }
        if let Some(u) = self.unit.iter().find(|u| !ids.contains(u.as_str())) {
            return Err(Error::Malformed(format!(
                "unit names unknown component {u}"
            )));
        }
        if let Some(h) = &self.hom_counts {
            let n = self.simples.len();
            if h.len() != n || h.iter().any(|row| row.len() != n) {
                return Err(Error::Malformed(format!("hom_counts must be {n}×{n}")));
            }
            for i in 0..n {
                for j in 0..n {
                    let same = self.simples[i].component == self.simples[j].component;
                    if (h[i][j] > 0) != same {
                        return Err(Error::Malformed(format!(
                            "hom_counts[{i}][{j}] = {} contradicts the component assignment",
                            h[i][j]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn component(&self, id: &str) -> Option<&Component2Cat> {
        self.components.iter().find(|c| c.id == id)
    }

    pub fn with_hom_counts(mut self, hom_counts: Vec<Vec<u64>>) -> Result<Self> {
        self.hom_counts = Some(hom_counts);
        self.check()?;
        Ok(self)
    }
}

pub fn pi0(c: &Compact2CatModel) -> usize {
    c.components.len()
}

fn pair_id(c: &str, d: &str) -> String {
    format!("{c}⊡{d}")
}

/// `Mod(Vect_G)`: one component with endomorphism ring `Vect_G`, simples the
/// pairs `(H, ψ)`. Hom counts are left unset.
pub fn mod_vect(g: &FiniteAbelianGroup, k: CharDescriptor) -> Result<Compact2CatModel> {
    let id = format!("Mod(Vect_{g})");
    let component = Component2Cat::new(id.clone(), fusion::group_ring(g)?, None)?;
    let simples = classify_module_simples(g, k)?
        .into_iter()
        .map(|s| SimpleEntry {
            label: s.label,
            component: id.clone(),
        })
        .collect();
    Compact2CatModel::new(
        FieldDescriptor::AlgClosed(k),
        vec![component],
        simples,
        None,
        vec![id],
    )
}

/// Components of `C ⊡ D`. Over an algebraically closed field they are the
/// pairs of components; over ℝ each pair splits along the Wedderburn
/// factors of the tensor product of the two real models.
pub fn product_components(c: &Compact2CatModel, d: &Compact2CatModel) -> Result<Compact2CatModel> {
    if c.field != d.field {
        return Err(Error::FieldMismatch {
            left: c.field.to_string(),
            right: d.field.to_string(),
        });
    }
    let mut components = Vec::new();
    let mut unit = Vec::new();
    for x in &c.components {
        for y in &d.components {
            let ring = fusion::deligne_product(&x.endo_ring, &y.endo_ring)?;
            let hosts_unit = c.unit.contains(&x.id) && d.unit.contains(&y.id);
            if !c.field.is_real() {
                let id = pair_id(&x.id, &y.id);
                if hosts_unit {
                    unit.push(id.clone());
                }
                components.push(Component2Cat::new(id, ring, None)?);
                continue;
            }
            let rx = x
                .real_model
                .as_ref()
                .ok_or_else(|| Error::MissingRealModel(x.id.clone()))?;
            let ry = y
                .real_model
                .as_ref()
                .ok_or_else(|| Error::MissingRealModel(y.id.clone()))?;
            let split = algebra::tensor(rx, ry)?;
            for (idx, &(_, div)) in split.factors().iter().enumerate() {
                let id = format!("{}#{}", pair_id(&x.id, &y.id), idx + 1);
                if hosts_unit {
                    unit.push(id.clone());
                }
                // Morita class of the factor
                let model = SemisimpleAlgebra::simple(c.field, 1, div)?;
                components.push(Component2Cat::new(id, ring.clone(), Some(model))?);
            }
        }
    }
    if c.field.is_real() {
        return Compact2CatModel::new(c.field, components, Vec::new(), None, unit);
    }
    let simples = c
        .simples
        .iter()
        .flat_map(|s| {
            d.simples.iter().map(move |t| SimpleEntry {
                label: format!("{}⊠{}", s.label, t.label),
                component: pair_id(&s.component, &t.component),
            })
        })
        .collect();
    let hom_counts = match (&c.hom_counts, &d.hom_counts) {
        (Some(a), Some(b)) => Some(kronecker(a, b)),
        _ => None,
    };
    Compact2CatModel::new(c.field, components, simples, hom_counts, unit)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ProductSimples {
    /// Every simple of the product is a pair.
    Complete(Vec<(String, String)>),
    /// The pairs enumerate only the image of `⊡`.
    Partial(Vec<(String, String)>),
}

impl ProductSimples {
    pub fn pairs(&self) -> &[(String, String)] {
        match self {
            ProductSimples::Complete(p) | ProductSimples::Partial(p) => p,
        }
    }

    pub fn is_complete(&self) -> bool {
        matches!(self, ProductSimples::Complete(_))
    }
}

/// Pairs of simples grouped by component pair; complete when every
/// component pair has certified coprime FP dimensions.
pub fn simples_of_product(c: &Compact2CatModel, d: &Compact2CatModel) -> Result<ProductSimples> {
    if c.field != d.field {
        return Err(Error::FieldMismatch {
            left: c.field.to_string(),
            right: d.field.to_string(),
        });
    }
    if c.field.is_real() {
        return Err(Error::Unsupported(
            "classifying simple objects of a product over the reals".into(),
        ));
    }
    fn by_component(m: &Compact2CatModel) -> HashMap<&str, Vec<&str>> {
        let mut map: HashMap<&str, Vec<&str>> = HashMap::new();
        for s in &m.simples {
            map.entry(s.component.as_str())
                .or_default()
                .push(s.label.as_str());
        }
        map
    }
    let (left, right) = (by_component(c), by_component(d));
    let mut pairs = Vec::new();
    let mut complete = true;
    for x in &c.components {
        for y in &d.components {
            complete &= factorization_certificate(&x.fp, &y.fp).is_certified();
            for s in left.get(x.id.as_str()).into_iter().flatten() {
                for t in right.get(y.id.as_str()).into_iter().flatten() {
                    pairs.push((s.to_string(), t.to_string()));
                }
            }
        }
    }
    Ok(if complete {
        ProductSimples::Complete(pairs)
    } else {
        ProductSimples::Partial(pairs)
    })
}

/// Hom-category simple counts of `C ⊡ D`, indexed by pairs in row-major order.
pub fn hom_count_product(c: &Compact2CatModel, d: &Compact2CatModel) -> Result<Vec<Vec<u64>>> {
    if c.field.is_real() || d.field.is_real() {
        return Err(Error::Unsupported(
            "hom counts of a product over the reals".into(),
        ));
    }
    let a = c
        .hom_counts
        .as_ref()
        .ok_or(Error::MissingHomCounts("left factor"))?;
    let b = d
        .hom_counts
        .as_ref()
        .ok_or(Error::MissingHomCounts("right factor"))?;
    Ok(kronecker(a, b))
}

pub fn kronecker(a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for ra in a {
        for rb in b {
            out.push(
                ra.iter()
                    .flat_map(|&x| rb.iter().map(move |&y| x * y))
                    .collect(),
            );
        }
    }
    out
}

/// `Mod(Vect_D)` for a division algebra `D` over ℝ: one simple object whose
/// endomorphisms form `D`.
pub fn mod_vect_division(field: FieldDescriptor, div: DivisionTag) -> Result<Compact2CatModel> {
    let id = format!("Mod(Vect_{})", div.symbol());
    let real_model = if field.is_real() {
        Some(SemisimpleAlgebra::simple(field, 1, div)?)
    } else {
        None
    };
    let component = Component2Cat::new(id.clone(), fusion::rank_one(div.symbol()), real_model)?;
    let simple = SimpleEntry {
        label: format!("Vect_{}", div.symbol()),
        component: id.clone(),
    };
    Compact2CatModel::new(
        field,
        vec![component],
        vec![simple],
        Some(vec![vec![1]]),
        vec![id],
    )
}
