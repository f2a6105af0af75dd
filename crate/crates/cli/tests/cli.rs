use std::path::Path;
use std::process::{Command, Output};

use deligne_core::fixtures::PrintedTable;
use deligne_core::fusion::{self, find_isomorphism, FusionRing};
use deligne_core::groups::{FiniteAbelianGroup, Subgroup};
use deligne_core::modules::{ModuleFusionTable, ModuleSimple};
use deligne_core::two_cat::Compact2CatModel;

const IDS: [&str; 6] = [
    "mod6",
    "mod22",
    "vect-r",
    "table-2b3t",
    "table-2b2b",
    "coprime-demo",
];

fn deligne(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deligne"))
        .args(args)
        .env_remove("FUSION_CAP")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_ring(dir: &Path, name: &str, ring: &FusionRing) -> String {
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string(ring).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

fn group(orders: &[u64]) -> FiniteAbelianGroup {
    FiniteAbelianGroup::new(orders).unwrap()
}

#[test]
fn every_fixture_matches_its_goldens() {
    for id in IDS {
        for format in ["text", "json", "csv"] {
            let o = deligne(&["example", id, "--format", format, "--check"]);
            assert_eq!(o.status.code(), Some(0), "{id} {format}: {}", stderr(&o));
        }
    }
}

#[test]
fn example_outputs() {
    let o = deligne(&["example", "mod6", "--format", "text"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = deligne(&["example", "vect-r"]);
    assert_eq!(
        stdout(&o),
        "pi0 = 2; components: Mod(Vect_C), Mod(Vect_C)\n"
    );
    let o = deligne(&["example", "table-2b3t"]);
    assert!(stdout(&o).contains("3⟨a+b⟩"));
}

#[test]
fn unknown_fixture_is_a_usage_error() {
    let o = deligne(&["example", "mod7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o)
        .contains("possible values: mod6, mod22, vect-r, table-2b3t, table-2b2b, coprime-demo"));
}

#[test]
fn json_outputs_round_trip() {
    for id in IDS {
        let text = stdout(&deligne(&["example", id, "--format", "json"]));
        let ok = match id {
            "mod6" | "mod22" => serde_json::from_str::<Vec<ModuleSimple>>(&text).is_ok(),
            "vect-r" => serde_json::from_str::<Compact2CatModel>(&text).is_ok(),
            "table-2b3t" | "table-2b2b" => serde_json::from_str::<ModuleFusionTable>(&text).is_ok(),
            _ => serde_json::from_str::<serde_json::Value>(&text)
                .map(|v| v.as_array().map(Vec::len) == Some(2))
                .unwrap_or(false),
        };
        assert!(ok, "{id}");
    }
    let text = stdout(&deligne(&[
        "group",
        "subgroups",
        "--orders",
        "2,4",
        "--format",
        "json",
    ]));
    assert_eq!(
        serde_json::from_str::<Vec<Subgroup>>(&text).unwrap().len(),
        8
    );
    let text = stdout(&deligne(&[
        "group", "h2", "--orders", "2,2", "--format", "json",
    ]));
    assert_eq!(
        serde_json::from_str::<Vec<ModuleSimple>>(&text)
            .unwrap()
            .len(),
        2
    );
}

#[test]
fn table_json_agrees_with_the_fixture() {
    let text = stdout(&deligne(&["example", "table-2b3t", "--format", "json"]));
    let table: ModuleFusionTable = serde_json::from_str(&text).unwrap();
    let printed: PrintedTable = serde_json::from_str(deligne_core::fixtures::TABLE_2B3T).unwrap();
    assert_eq!(table.ring, printed.table.ring);
}

#[test]
fn fusion_verify() {
    let dir = tempfile::tempdir().unwrap();
    let z6 = fusion::group_ring(&group(&[6])).unwrap();
    let path = write_ring(dir.path(), "z6.json", &z6);
    let o = deligne(&["fusion", "verify", &path]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "ok\n"));

    let mut value: serde_json::Value = serde_json::to_value(&z6).unwrap();
    value["N"][1][1][1] = 1.into();
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, value.to_string()).unwrap();
    let o = deligne(&["fusion", "verify", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("associativity"));

    let malformed = dir.path().join("malformed.json");
    std::fs::write(&malformed, r#"{"labels":["1"],"unit":[0],"N":[[[1,0]]]}"#).unwrap();
    let o = deligne(&["fusion", "verify", malformed.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("N[0][0] has 2 entries"),
        "{}",
        stderr(&o)
    );

    let o = deligne(&[
        "fusion",
        "verify",
        dir.path().join("missing.json").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fusion_product_matches_cyclic_six() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_ring(
        dir.path(),
        "z2.json",
        &fusion::group_ring(&group(&[2])).unwrap(),
    );
    let b = write_ring(
        dir.path(),
        "z3.json",
        &fusion::group_ring(&group(&[3])).unwrap(),
    );
    let out = dir.path().join("z6.json");
    let o = deligne(&["fusion", "product", &a, &b, "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let product: FusionRing =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(product.rank(), 6);
    assert!(find_isomorphism(&product, &fusion::group_ring(&group(&[6])).unwrap()).is_some());
}

#[test]
fn fusion_fpdim() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_ring(
        dir.path(),
        "ising.json",
        &fusion::tambara_yamagami(&group(&[2])).unwrap(),
    );
    let o = deligne(&["fusion", "fpdim", &path]);
    assert_eq!(stdout(&o), "1, 1, 1.41421356; total 4\n");
    let o = deligne(&["fusion", "fpdim", &path, "--format", "json"]);
    let fp: fusion::FPData = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(fp.integral);
}

#[test]
fn group_commands() {
    let o = deligne(&["group", "simples", "--orders", "2,2", "--char", "0"]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 6);
    assert_eq!(out.lines().last(), Some("(⟨a,b⟩,ν)"));
    let o = deligne(&["group", "h2", "--orders", "6", "--char", "0"]);
    assert_eq!(stdout(&o), "1 class (trivial)\n");
    let o = deligne(&["group", "h2", "--orders", "2,2"]);
    assert_eq!(stdout(&o), "2 classes: triv, ν\n");
    let o = deligne(&["group", "subgroups", "--orders", "6"]);
    assert_eq!(stdout(&o), "⟨0⟩\n⟨3⟩\n⟨2⟩\n⟨1⟩\n");
    let o = deligne(&["group", "simples", "--orders", "2", "--char", "2"]);
    assert_eq!(stdout(&o), "(⟨0⟩,triv)\n");
}

#[test]
fn group_argument_errors() {
    for args in [
        &["group", "subgroups", "--orders", "1"][..],
        &["group", "subgroups", "--orders", "2,x"],
        &["group", "h2", "--orders", "2", "--char", "4"],
    ] {
        assert_eq!(deligne(args).status.code(), Some(2), "{args:?}");
    }
    let o = Command::new(env!("CARGO_BIN_EXE_deligne"))
        .args(["group", "subgroups", "--orders", "6"])
        .env("FUSION_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("exceeds the cap of 5"));
}
