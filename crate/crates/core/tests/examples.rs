macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(basis_tables, "basis_tables.rs");
example!(regrading, "regrading.rs");
example!(root_adjunction, "root_adjunction.rs");
example!(hochschild, "hochschild.rs");
example!(cofiber_and_etale, "cofiber_and_etale.rs");
example!(splitting, "splitting.rs");
example!(ktheory_tables, "ktheory_tables.rs");
example!(property_suite, "property_suite.rs");
example!(documents, "documents.rs");

#[test]
fn every_example_runs() {
    basis_tables::run_example().expect("basis_tables");
    regrading::run_example().expect("regrading");
    root_adjunction::run_example().expect("root_adjunction");
    hochschild::run_example().expect("hochschild");
    cofiber_and_etale::run_example().expect("cofiber_and_etale");
    splitting::run_example().expect("splitting");
    ktheory_tables::run_example().expect("ktheory_tables");
    property_suite::run_example().expect("property_suite");
    documents::run_example().expect("documents");
}
