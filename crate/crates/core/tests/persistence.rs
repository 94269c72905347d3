use tautring::catalog::all_catalog_cases;
use tautring::json::to_canonical;
use tautring::model::ModelJson;
use tautring::Model;

#[test]
fn export_import_export_is_identical() {
    for c in all_catalog_cases().unwrap() {
        let first = to_canonical(&c.model().to_json()).unwrap();
        let back = Model::from_json(&serde_json::from_str::<ModelJson>(&first).unwrap()).unwrap();
        assert_eq!(to_canonical(&back.to_json()).unwrap(), first, "g={} ({})", c.descriptor.genus, c.descriptor.label);
    }
}

#[test]
fn import_rejects_unknown_fields_and_bad_products() {
    let cases = all_catalog_cases().unwrap();
    let c = cases.iter().find(|c| c.descriptor.genus == 6 && c.descriptor.label == "d").unwrap();
    let mut v = serde_json::to_value(c.model().to_json()).unwrap();
    v["extra"] = serde_json::json!(1);
    assert!(serde_json::from_value::<ModelJson>(v).is_err());

    let mut j = c.model().to_json();
    j.basic_products[0].value[0].m += 1;
    assert!(Model::from_json(&j).is_err());

    let mut j = c.model().to_json();
    j.admissible.retain(|i| i.entries() != [2]);
    assert!(Model::from_json(&j).is_err());
}
