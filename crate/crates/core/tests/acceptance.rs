//! Acceptance criteria 1–9; one PASS/FAIL line each, nonzero exit on failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use deligne_core::algebra::{
    tensor, tensor_brute_force, DivisionTag, FieldDescriptor, SemisimpleAlgebra,
};
use deligne_core::fixtures;
use deligne_core::fusion::{
    self, deligne_product, direct_sum, fp_data, group_ring, tambara_yamagami, FusionRing,
};
use deligne_core::groups::{
    abelian_groups_of_order, h2_brute_force_count, h2_invariants, CharDescriptor,
    FiniteAbelianGroup, Subgroup,
};
use deligne_core::intmat::gcd;
use deligne_core::modules::{
    classify_module_simples, classify_module_simples_named, factorization_certificate, Completeness,
};
use deligne_core::two_cat::{
    self, hom_count_product, mod_vect, Compact2CatModel, Component2Cat, SimpleEntry,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

const K0: CharDescriptor = CharDescriptor::ZERO;

fn criterion_1() -> Outcome {
    let g = FiniteAbelianGroup::cyclic(6).map_err(err)?;
    let simples = classify_module_simples(&g, K0).map_err(err)?;
    let labels: Vec<&str> = simples.iter().map(|s| s.label.as_str()).collect();
    ensure(
        labels == ["(⟨0⟩,triv)", "(⟨3⟩,triv)", "(⟨2⟩,triv)", "(⟨1⟩,triv)"],
        format!("got {labels:?}"),
    )?;
    ensure(
        simples.iter().all(|s| s.class.is_trivial()),
        "nontrivial class",
    )?;
    Ok(labels.join(" "))
}

fn criterion_2() -> Outcome {
    let g = FiniteAbelianGroup::new(&[2, 2]).map_err(err)?;
    let simples = classify_module_simples_named(&g, K0, &fixtures::klein_names()).map_err(err)?;
    let twisted: Vec<_> = simples.iter().filter(|s| !s.class.is_trivial()).collect();
    ensure(simples.len() == 6, format!("{} simples", simples.len()))?;
    ensure(
        twisted.len() == 1,
        format!("{} twisted simples", twisted.len()),
    )?;
    ensure(
        twisted[0].subgroup == Subgroup::full(&g),
        "twisted simple not on ⟨a,b⟩",
    )?;
    ensure(twisted[0].label == "(⟨a,b⟩,ν)", twisted[0].label.clone())?;
    Ok(format!("6 simples, one twisted: {}", twisted[0].label))
}

fn criterion_3() -> Outcome {
    let printed = fixtures::printed_2b3t();
    let got = fixtures::reproduce_2b3t().map_err(err)?;
    let (p, r) = (&printed.table.ring, &got.ring);
    ensure(p.labels() == r.labels(), format!("labels {:?}", r.labels()))?;
    for i in 0..4 {
        for j in 0..4 {
            ensure(
                p.product(i, j) == r.product(i, j),
                format!("entry ({i},{j}): {}", r.entry_text(i, j)),
            )?;
        }
    }
    let at = |a: &str, b: &str| r.entry_text(r.index_of(a).unwrap(), r.index_of(b).unwrap());
    ensure(at("⟨b⟩", "⟨b⟩") == "3⟨b⟩", "⟨b⟩·⟨b⟩")?;
    ensure(at("⟨a+b⟩", "⟨a+b⟩") == "3⟨b⟩", "⟨a+b⟩·⟨a+b⟩")?;
    ensure(at("⟨b⟩", "⟨a+b⟩") == "3⟨a+b⟩", "⟨b⟩·⟨a+b⟩")?;
    ensure(got.completeness == Completeness::Complete, "completeness")?;
    Ok("16 entries match, Complete".into())
}

fn criterion_4() -> Outcome {
    let printed = fixtures::printed_2b2b();
    let got = fixtures::reproduce_2b2b().map_err(err)?;
    ensure(got.ring.labels() == printed.table.ring.labels(), "labels")?;
    for i in 0..4 {
        for j in 0..4 {
            ensure(
                got.ring.product(i, j) == printed.table.ring.product(i, j),
                format!("entry ({i},{j}): {}", got.ring.entry_text(i, j)),
            )?;
        }
    }
    ensure(got.completeness == Completeness::ImageOnly, "completeness")?;
    let g = FiniteAbelianGroup::new(&[2, 2]).map_err(err)?;
    let true_count = classify_module_simples(&g, K0).map_err(err)?.len();
    ensure(
        Some(true_count) == printed.true_simple_count,
        "fixture true count",
    )?;
    ensure(
        got.ring.rank() == 4 && 4 < true_count,
        format!("{} pairs vs {true_count}", got.ring.rank()),
    )?;
    Ok(format!("16 entries match, ImageOnly, 4 < {true_count}"))
}

fn criterion_5() -> Outcome {
    let real = fixtures::model_mod_vect_c_real();
    let product = two_cat::product_components(&real, &real).map_err(err)?;
    ensure(
        two_cat::pi0(&product) == 2,
        format!("real pi0 = {}", two_cat::pi0(&product)),
    )?;
    let c = SemisimpleAlgebra::simple(FieldDescriptor::Real, 1, DivisionTag::Cplx).map_err(err)?;
    ensure(
        product
            .components
            .iter()
            .all(|x| x.real_model.as_ref() == Some(&c)),
        "component models",
    )?;
    ensure(
        product.unit.len() == 2 && real.unit.len() == 1,
        "unit decomposition",
    )?;

    let closed = Compact2CatModel::new(
        FieldDescriptor::AlgClosed(K0),
        real.components.clone(),
        real.simples.clone(),
        real.hom_counts.clone(),
        real.unit.clone(),
    )
    .map_err(err)?;
    let closed_product = two_cat::product_components(&closed, &closed).map_err(err)?;
    ensure(
        two_cat::pi0(&closed_product) == 1,
        format!("closed pi0 = {}", two_cat::pi0(&closed_product)),
    )?;
    Ok("pi0 = 2 over R (both C), pi0 = 1 over AC0".into())
}

fn simples_count(g: &FiniteAbelianGroup) -> Result<usize, String> {
    classify_module_simples(g, K0).map(|s| s.len()).map_err(err)
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for n1 in 1..=36u64 {
        for n2 in n1..=36 / n1 {
            if gcd(n1, n2) != 1 {
                continue;
            }
            for g1 in abelian_groups_of_order(n1) {
                for g2 in abelian_groups_of_order(n2) {
                    let g = g1.direct_sum(&g2).map_err(err)?;
                    let (a, b, c) = (simples_count(&g1)?, simples_count(&g2)?, simples_count(&g)?);
                    ensure(c == a * b, format!("{g1} ⊕ {g2}: {c} != {a}·{b}"))?;
                    let (m1, m2) = (
                        mod_vect(&g1, K0).map_err(err)?,
                        mod_vect(&g2, K0).map_err(err)?,
                    );
                    let cert =
                        factorization_certificate(&m1.components[0].fp, &m2.components[0].fp);
                    ensure(cert.is_certified(), format!("{g1}, {g2}: {}", cert.reason))?;
                    let pairs = two_cat::simples_of_product(&m1, &m2).map_err(err)?;
                    ensure(
                        pairs.is_complete() && pairs.pairs().len() == c,
                        format!("{g1}, {g2}: pairs"),
                    )?;
                    checked += 1;
                }
            }
        }
    }
    let mut refused = Vec::new();
    for (n1, n2) in [(2, 2), (2, 4)] {
        for g1 in abelian_groups_of_order(n1) {
            for g2 in abelian_groups_of_order(n2) {
                let (m1, m2) = (
                    mod_vect(&g1, K0).map_err(err)?,
                    mod_vect(&g2, K0).map_err(err)?,
                );
                let cert = factorization_certificate(&m1.components[0].fp, &m2.components[0].fp);
                ensure(!cert.is_certified(), format!("{g1}, {g2} certified"))?;
                let pairs = two_cat::simples_of_product(&m1, &m2).map_err(err)?;
                let truth = simples_count(&g1.direct_sum(&g2).map_err(err)?)?;
                ensure(
                    !pairs.is_complete() && pairs.pairs().len() < truth,
                    format!("{g1}, {g2}: pairs"),
                )?;
                refused.push(format!("{g1}×{g2}: {} < {truth}", pairs.pairs().len()));
            }
        }
    }
    Ok(format!(
        "{checked} coprime group pairs certified; NotCertified {}",
        refused.join(", ")
    ))
}

fn criterion_7() -> Outcome {
    let mut cases = 0;
    for n in 1..=16 {
        for g in abelian_groups_of_order(n) {
            let h = Subgroup::full(&g);
            for p in [0, 2, 3, 5] {
                let k = CharDescriptor::new(p).map_err(err)?;
                let formula: u64 = h2_invariants(&h, k).iter().product();
                let oracle = h2_brute_force_count(&h, k).map_err(err)?;
                ensure(
                    formula == oracle,
                    format!("{g}, char {p}: formula {formula}, oracle {oracle}"),
                )?;
                cases += 1;
            }
        }
    }
    let tags = [DivisionTag::Base, DivisionTag::Cplx, DivisionTag::Quat];
    let mut pairs = 0;
    for (i, &d) in tags.iter().enumerate() {
        for &e in &tags[i..] {
            let a = SemisimpleAlgebra::simple(FieldDescriptor::Real, 1, d).map_err(err)?;
            let b = SemisimpleAlgebra::simple(FieldDescriptor::Real, 1, e).map_err(err)?;
            let predicted = tensor(&a, &b).map_err(err)?;
            let (dim, center) = tensor_brute_force(&a, &b).map_err(err)?;
            ensure(
                (dim, center) == (predicted.dimension(), predicted.center_dimension()),
                format!("{d:?}⊗{e:?}: oracle ({dim},{center}), rules {predicted}"),
            )?;
            pairs += 1;
        }
    }
    Ok(format!("{cases} H² cases, {pairs} division-algebra pairs"))
}

/// Group rings `|G| ≤ 8`, Tambara–Yamagami rings `|G| ≤ 4`, and direct
/// sums of two of those with total rank at most 8.
fn ring_pool() -> (Vec<FusionRing>, Vec<FusionRing>) {
    let mut base = Vec::new();
    for n in 1..=8 {
        for g in abelian_groups_of_order(n) {
            base.push(group_ring(&g).unwrap());
            if n <= 4 {
                base.push(tambara_yamagami(&g).unwrap());
            }
        }
    }
    let mut sums = Vec::new();
    for a in &base {
        for b in &base {
            if a.rank() + b.rank() <= 8 {
                sums.push(direct_sum(a, b).unwrap());
            }
        }
    }
    (base, sums)
}

fn criterion_8() -> Outcome {
    let (base, sums) = ring_pool();
    let pool: Vec<&FusionRing> = base.iter().chain(&sums).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut worst = 0f64;
    for &r in &pool {
        ensure(
            r.validate().is_ok(),
            format!("pool ring {:?} invalid", r.labels()),
        )?;
    }
    for trial in 0..100 {
        let r = pool[rng.gen_range(0..pool.len())];
        let s = pool[rng.gen_range(0..pool.len())];
        let p = deligne_product(r, s).map_err(err)?;
        ensure(
            p.validate().is_ok(),
            format!("trial {trial}: product invalid"),
        )?;
        let (fr, fs, fp) = (
            fp_data(r).map_err(err)?,
            fp_data(s).map_err(err)?,
            fp_data(&p).map_err(err)?,
        );
        let gap = (fp.total - fr.total * fs.total).abs();
        worst = worst.max(gap);
        ensure(
            gap < 1e-6,
            format!(
                "trial {trial}: |{} - {}·{}| = {gap:e}",
                fp.total, fr.total, fs.total
            ),
        )?;
    }

    let small: Vec<&FusionRing> = base.iter().filter(|r| r.rank() <= 6).collect();
    for trial in 0..25 {
        let pick = |rng: &mut ChaCha8Rng| small[rng.gen_range(0..small.len())];
        let (r, s, t) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let left = deligne_product(&deligne_product(r, s).map_err(err)?, t).map_err(err)?;
        let right = deligne_product(r, &deligne_product(s, t).map_err(err)?).map_err(err)?;
        let (a, b, c) = (r.rank(), s.rank(), t.rank());
        let lidx = |i: usize, j: usize, k: usize| (i * b + j) * c + k;
        let ridx = |i: usize, j: usize, k: usize| i * (b * c) + (j * c + k);
        let triples: Vec<(usize, usize, usize)> = (0..a)
            .flat_map(|i| (0..b).flat_map(move |j| (0..c).map(move |k| (i, j, k))))
            .collect();
        for &(i, j, k) in &triples {
            for &(i2, j2, k2) in &triples {
                for &(i3, j3, k3) in &triples {
                    let x = left.n(lidx(i, j, k), lidx(i2, j2, k2), lidx(i3, j3, k3));
                    let y = right.n(ridx(i, j, k), ridx(i2, j2, k2), ridx(i3, j3, k3));
                    ensure(x == y, format!("triple {trial}: entry mismatch"))?;
                }
            }
        }
    }
    Ok(format!(
        "100 products (max FP gap {worst:.1e}), {} pool rings valid, 25 triples associative",
        pool.len()
    ))
}

fn connected_model(hom: Vec<Vec<u64>>) -> Compact2CatModel {
    let comp = Component2Cat::new("c", fusion::rank_one("1"), None).unwrap();
    let simples = (0..hom.len())
        .map(|i| SimpleEntry {
            label: format!("s{i}"),
            component: "c".into(),
        })
        .collect();
    Compact2CatModel::new(
        FieldDescriptor::AlgClosed(K0),
        vec![comp],
        simples,
        Some(hom),
        vec!["c".into()],
    )
    .unwrap()
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut trials = 0;
    for _ in 0..200 {
        let (p, q) = (rng.gen_range(1..=6usize), rng.gen_range(1..=6usize));
        let a: Vec<Vec<u64>> = (0..p)
            .map(|_| (0..p).map(|_| rng.gen_range(1..=9)).collect())
            .collect();
        let b: Vec<Vec<u64>> = (0..q)
            .map(|_| (0..q).map(|_| rng.gen_range(1..=9)).collect())
            .collect();
        let got = hom_count_product(&connected_model(a.clone()), &connected_model(b.clone()))
            .map_err(err)?;
        let mut oracle = vec![vec![0u64; p * q]; p * q];
        for i in 0..p {
            for j in 0..q {
                for i2 in 0..p {
                    for j2 in 0..q {
                        oracle[i * q + j][i2 * q + j2] = a[i][i2] * b[j][j2];
                    }
                }
            }
        }
        ensure(got == oracle, format!("{p}×{p} ⊗ {q}×{q} mismatch"))?;
        trials += 1;
    }
    Ok(format!("{trials} random Kronecker products up to 36×36"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("Mod(Vect_Z6) classification", criterion_1),
        ("Mod(Vect_Z2⊕Z2) classification", criterion_2),
        ("2b+3triv product table", criterion_3),
        ("2b+2b product subtable", criterion_4),
        ("Vect_C over R splits", criterion_5),
        ("coprime factorization", criterion_6),
        ("oracle equivalence", criterion_7),
        ("numeric properties", criterion_8),
        ("hom-count Kronecker", criterion_9),
    ];
    let start = Instant::now();
    let mut failures = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} [{ms} ms]", n + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {detail} [{ms} ms]", n + 1);
            }
        }
    }
    println!(
        "acceptance: {}/9 passed in {} ms",
        9 - failures,
        start.elapsed().as_millis()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
