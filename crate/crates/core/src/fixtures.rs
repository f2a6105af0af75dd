//! Worked examples shipped as JSON.

use std::collections::HashMap;

use serde::Deserialize;

use crate::error::Result;
use crate::groups::ElementNames;
use crate::modules::{module_table_product, ModuleFusionTable};
use crate::two_cat::Compact2CatModel;

pub const BASE_Z2_BETA: &str = include_str!("../fixtures/base_z2_beta.json");
pub const BASE_Z3_TRIV: &str = include_str!("../fixtures/base_z3_triv.json");
pub const TABLE_2B3T: &str = include_str!("../fixtures/table_2b3t.json");
pub const TABLE_2B2B: &str = include_str!("../fixtures/table_2b2b.json");
pub const MODEL_MOD_VECT_Z2: &str = include_str!("../fixtures/model_mod_vect_z2.json");
pub const MODEL_MOD_VECT_Z3: &str = include_str!("../fixtures/model_mod_vect_z3.json");
pub const MODEL_MOD_VECT_C_REAL: &str = include_str!("../fixtures/model_mod_vect_c_real.json");

/// A transcribed product table with the bijection from pairs of factor
/// labels to its row labels.
#[derive(Clone, Debug, Deserialize)]
pub struct PrintedTable {
    pub table: ModuleFusionTable,
    pub pair_labels: Vec<(String, String)>,
    pub factors: (String, String),
    #[serde(default)]
    pub true_simple_count: Option<usize>,
    pub note: String,
}

impl PrintedTable {
    pub fn pair_map(&self) -> HashMap<String, String> {
        self.pair_labels.iter().cloned().collect()
    }
}

fn parse<T: for<'de> Deserialize<'de>>(name: &str, text: &str) -> T {
    serde_json::from_str(text).unwrap_or_else(|e| panic!("embedded fixture {name} is invalid: {e}"))
}

/// `{⟨0⟩, ⟨1⟩ : ⟨1⟩² = ⟨0⟩}`.
pub fn base_z2_beta() -> ModuleFusionTable {
    parse("base_z2_beta", BASE_Z2_BETA)
}

/// `{⟨0⟩, ⟨1⟩ : ⟨1⟩² = 3⟨1⟩}`.
pub fn base_z3_triv() -> ModuleFusionTable {
    parse("base_z3_triv", BASE_Z3_TRIV)
}

pub fn printed_2b3t() -> PrintedTable {
    parse("table_2b3t", TABLE_2B3T)
}

/// Restricted to `⟨0⟩, ⟨a⟩, ⟨b⟩, ⟨a,b⟩`.
pub fn printed_2b2b() -> PrintedTable {
    parse("table_2b2b", TABLE_2B2B)
}

pub fn model_mod_vect_z2() -> Compact2CatModel {
    parse("model_mod_vect_z2", MODEL_MOD_VECT_Z2)
}

pub fn model_mod_vect_z3() -> Compact2CatModel {
    parse("model_mod_vect_z3", MODEL_MOD_VECT_Z3)
}

pub fn model_mod_vect_c_real() -> Compact2CatModel {
    parse("model_mod_vect_c_real", MODEL_MOD_VECT_C_REAL)
}

/// Element names for `ℤ/2 ⊕ ℤ/2` with `c = a+b`.
pub fn klein_names() -> ElementNames {
    ElementNames::default().with_override(vec![1, 1], "c")
}

/// Multiplies the two base tables, renames pairs through the printed
/// bijection and orders rows like the printed table.
pub fn reproduce(
    printed: &PrintedTable,
    left: &ModuleFusionTable,
    right: &ModuleFusionTable,
) -> Result<ModuleFusionTable> {
    let mut product = module_table_product(left, right)?;
    product.ring = product
        .ring
        .relabeled(&printed.pair_map())
        .reordered_by_labels(printed.table.ring.labels())?;
    Ok(product)
}

pub fn reproduce_2b3t() -> Result<ModuleFusionTable> {
    reproduce(&printed_2b3t(), &base_z2_beta(), &base_z3_triv())
}

pub fn reproduce_2b2b() -> Result<ModuleFusionTable> {
    let base = base_z2_beta();
    reproduce(&printed_2b2b(), &base, &base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::find_isomorphism;
    use crate::groups::{CharDescriptor, FiniteAbelianGroup};
    use crate::modules::Completeness;
    use crate::two_cat::mod_vect;

    #[test]
    fn fixtures_parse_and_validate() {
        for t in [
            base_z2_beta(),
            base_z3_triv(),
            printed_2b3t().table,
            printed_2b2b().table,
        ] {
            assert!(t.ring.validate().is_ok());
        }
        assert_eq!(printed_2b2b().true_simple_count, Some(6));
        assert_eq!(model_mod_vect_c_real().components.len(), 1);
    }

    #[test]
    fn printed_table_factors_into_the_base_tables() {
        let printed = printed_2b3t();
        let ring = &printed.table.ring;
        let idx = |l: &str| ring.index_of(l).unwrap();
        let z2_part = ring.restricted(&[idx("⟨0⟩"), idx("⟨a⟩")]).unwrap();
        let z3_part = ring.restricted(&[idx("⟨0⟩"), idx("⟨b⟩")]).unwrap();
        assert_eq!(
            find_isomorphism(&z2_part, &base_z2_beta().ring),
            Some(vec![0, 1])
        );
        assert_eq!(
            find_isomorphism(&z3_part, &base_z3_triv().ring),
            Some(vec![0, 1])
        );
        // the remaining row is the product of the two generators
        assert_eq!(ring.entry_text(idx("⟨a⟩"), idx("⟨b⟩")), "⟨a+b⟩");
    }

    #[test]
    fn products_match_printed_tables() {
        let t = reproduce_2b3t().unwrap();
        assert_eq!(
            t.ring.product(2, 2),
            printed_2b3t().table.ring.product(2, 2)
        );
        assert_eq!(t.completeness, Completeness::Complete);
        let u = reproduce_2b2b().unwrap();
        assert_eq!(u.completeness, Completeness::ImageOnly);
    }

    #[test]
    fn models_agree_with_builders() {
        let k = CharDescriptor::ZERO;
        for (n, model, hom) in [
            (2, model_mod_vect_z2(), [[2, 1], [1, 2]]),
            (3, model_mod_vect_z3(), [[3, 1], [1, 3]]),
        ] {
            let built = mod_vect(&FiniteAbelianGroup::cyclic(n).unwrap(), k)
                .unwrap()
                .with_hom_counts(hom.iter().map(|r| r.to_vec()).collect())
                .unwrap();
            assert_eq!(built, model);
        }
    }
}
