use yangian_gz::catalog::catalog;
use yangian_gz::engine::{crossval, CrossvalOptions};

#[test]
fn engine_agrees_with_oracle_on_catalog() {
    for entry in catalog() {
        let r = crossval(&entry.spec, CrossvalOptions::default()).unwrap();
        println!("{}\n{r}", entry.name);
        assert!(r.all_passed(), "{}:\n{r}", entry.name);
    }
}

#[test]
fn corrupted_engine_family_is_caught() {
    let spec = yangian_gz::catalog::lookup("c2xc2").unwrap();
    let r = crossval(&spec, CrossvalOptions { corrupt: true, ..Default::default() }).unwrap();
    assert!(!r.all_passed());
    let failed = r.first_failure().unwrap();
    assert!(failed.name.contains("engine families satisfy"), "{r}");
}
