//! Named fixture pipelines and their golden renderings.

use clap::ValueEnum;
use deligne_core::fixtures;
use deligne_core::groups::{class_label, CharDescriptor, ElementNames, FiniteAbelianGroup};
use deligne_core::modules::{
    classify_module_simples, classify_module_simples_named, factorization_certificate,
    render_table, ModuleFusionTable, ModuleSimple,
};
use deligne_core::two_cat::{self, Compact2CatModel};
use deligne_core::Result;
use serde::{Deserialize, Serialize};

use crate::output;
use crate::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FixtureId {
    Mod6,
    Mod22,
    VectR,
    #[value(name = "table-2b3t")]
    Table2b3t,
    #[value(name = "table-2b2b")]
    Table2b2b,
    CoprimeDemo,
}

impl FixtureId {
    pub fn name(self) -> &'static str {
        match self {
            FixtureId::Mod6 => "mod6",
            FixtureId::Mod22 => "mod22",
            FixtureId::VectR => "vect-r",
            FixtureId::Table2b3t => "table-2b3t",
            FixtureId::Table2b2b => "table-2b2b",
            FixtureId::CoprimeDemo => "coprime-demo",
        }
    }
}

/// One line of the coprimality demonstration.
#[derive(Debug, Serialize, Deserialize)]
pub struct CoprimeRow {
    pub left: String,
    pub right: String,
    pub fp_left: u64,
    pub fp_right: u64,
    pub certificate: deligne_core::modules::FactorizationCertificate,
    pub complete: bool,
    pub pairs: usize,
    pub target: String,
    pub target_simples: usize,
}

pub fn render(id: FixtureId, format: Format) -> Result<String> {
    let k = CharDescriptor::ZERO;
    Ok(match id {
        FixtureId::Mod6 => {
            let names = ElementNames::default();
            render_simples(
                &classify_module_simples(&FiniteAbelianGroup::cyclic(6)?, k)?,
                &names,
                format,
            )
        }
        FixtureId::Mod22 => {
            let names = fixtures::klein_names();
            let g = FiniteAbelianGroup::new(&[2, 2])?;
            render_simples(
                &classify_module_simples_named(&g, k, &names)?,
                &names,
                format,
            )
        }
        FixtureId::VectR => render_vect_r(format)?,
        FixtureId::Table2b3t => render_module_table(&fixtures::reproduce_2b3t()?, None, format),
        FixtureId::Table2b2b => {
            let printed = fixtures::printed_2b2b();
            render_module_table(
                &fixtures::reproduce_2b2b()?,
                printed.true_simple_count,
                format,
            )
        }
        FixtureId::CoprimeDemo => render_coprime(format)?,
    })
}

pub fn render_simples(simples: &[ModuleSimple], names: &ElementNames, format: Format) -> String {
    match format {
        Format::Text => simples.iter().map(|s| format!("{}\n", s.label)).collect(),
        Format::Json => output::json(&simples),
        Format::Csv => output::csv(
            &["label", "subgroup", "order", "class"],
            simples.iter().map(|s| {
                vec![
                    s.label.clone(),
                    names.subgroup_label(&s.subgroup),
                    s.subgroup.order().to_string(),
                    class_label(&s.class),
                ]
            }),
        ),
    }
}

fn render_module_table(t: &ModuleFusionTable, true_count: Option<usize>, format: Format) -> String {
    match format {
        Format::Json => output::json(t),
        Format::Csv => t.ring.render_csv("⊠"),
        Format::Text => {
            let status = match true_count {
                Some(n) => format!(
                    "completeness: {:?} ({} of {n} simples)",
                    t.completeness,
                    t.ring.rank()
                ),
                None => format!("completeness: {:?}", t.completeness),
            };
            format!("{}{status}\n", render_table(t))
        }
    }
}

fn render_vect_r(format: Format) -> Result<String> {
    let c = fixtures::model_mod_vect_c_real();
    let product = two_cat::product_components(&c, &c)?;
    Ok(match format {
        Format::Json => output::json(&product),
        Format::Csv => output::csv(
            &["component", "model", "hosts_unit"],
            product.components.iter().map(|x| {
                vec![
                    x.id.clone(),
                    x.describe(),
                    product.unit.contains(&x.id).to_string(),
                ]
            }),
        ),
        Format::Text => {
            let names: Vec<String> = product.components.iter().map(|x| x.describe()).collect();
            format!(
                "pi0 = {}; components: {}\n",
                two_cat::pi0(&product),
                names.join(", ")
            )
        }
    })
}

fn coprime_row(
    left: &Compact2CatModel,
    right: &Compact2CatModel,
    target: &FiniteAbelianGroup,
) -> Result<CoprimeRow> {
    let simples = two_cat::simples_of_product(left, right)?;
    let (x, y) = (&left.components[0], &right.components[0]);
    let total = |m: &Compact2CatModel| m.components[0].fp.integral_total().unwrap_or(0);
    Ok(CoprimeRow {
        left: x.id.clone(),
        right: y.id.clone(),
        fp_left: total(left),
        fp_right: total(right),
        certificate: factorization_certificate(&x.fp, &y.fp),
        complete: simples.is_complete(),
        pairs: simples.pairs().len(),
        target: format!("Mod(Vect_{target})"),
        target_simples: classify_module_simples(target, CharDescriptor::ZERO)?.len(),
    })
}

fn render_coprime(format: Format) -> Result<String> {
    let (z2, z3) = (fixtures::model_mod_vect_z2(), fixtures::model_mod_vect_z3());
    let rows = vec![
        coprime_row(&z2, &z3, &FiniteAbelianGroup::cyclic(6)?)?,
        coprime_row(&z2, &z2, &FiniteAbelianGroup::new(&[2, 2])?)?,
    ];
    Ok(match format {
        Format::Json => output::json(&rows),
        Format::Csv => output::csv(
            &[
                "left",
                "right",
                "fp_left",
                "fp_right",
                "status",
                "reason",
                "complete",
                "pairs",
                "target",
                "target_simples",
            ],
            rows.iter().map(|r| {
                vec![
                    r.left.clone(),
                    r.right.clone(),
                    r.fp_left.to_string(),
                    r.fp_right.to_string(),
                    format!("{:?}", r.certificate.status),
                    r.certificate.reason.clone(),
                    r.complete.to_string(),
                    r.pairs.to_string(),
                    r.target.clone(),
                    r.target_simples.to_string(),
                ]
            }),
        ),
        Format::Text => rows
            .iter()
            .map(|r| {
                format!(
                    "{} ⊡ {}: FP {} and {}, {:?} ({}), {} pairs {} {} simples of {}\n",
                    r.left,
                    r.right,
                    r.fp_left,
                    r.fp_right,
                    r.certificate.status,
                    r.certificate.reason,
                    r.pairs,
                    if r.complete { "=" } else { "<" },
                    r.target_simples,
                    r.target
                )
            })
            .collect(),
    })
}

macro_rules! goldens {
    ($($id:ident, $stem:literal;)*) => {
        pub fn golden(id: FixtureId, format: Format) -> &'static str {
            match (id, format) {
                $(
                    (FixtureId::$id, Format::Text) => include_str!(concat!("../goldens/", $stem, ".txt")),
                    (FixtureId::$id, Format::Json) => include_str!(concat!("../goldens/", $stem, ".json")),
                    (FixtureId::$id, Format::Csv) => include_str!(concat!("../goldens/", $stem, ".csv")),
                )*
            }
        }
    };
}

goldens! {
    Mod6, "mod6";
    Mod22, "mod22";
    VectR, "vect-r";
    Table2b3t, "table-2b3t";
    Table2b2b, "table-2b2b";
    CoprimeDemo, "coprime-demo";
}

pub fn golden_name(id: FixtureId, format: Format) -> String {
    let ext = match format {
        Format::Text => "txt",
        Format::Json => "json",
        Format::Csv => "csv",
    };
    format!("{}.{ext}", id.name())
}
