//! Rank-3 checks: vertex 2 of the A_3 path has two neighbours, so the
//! H-series denominator bookkeeping and the E/F neighbour products see a
//! genuinely multi-factor case here.

use pmc_core::dynkin::DynkinGraph;
use pmc_core::gklo::{verify_relations, YangianData};
use pmc_core::klr::{cross_check_flagya, verify_ya_relations};
use pmc_core::multiset::ParamSet;
use pmc_core::report::failures;

fn a3_data() -> YangianData {
    let g = DynkinGraph::path(3, 1);
    let r = ParamSet::from_entries([(1, vec![1]), (2, vec![0]), (3, vec![3])]);
    YangianData::new(&g, &r, &[(1, 1), (2, 1), (3, 1)]).unwrap()
}

#[test]
fn a3_relation_suite_two_neighbour_vertex() {
    let d = a3_data();
    let reports = verify_relations(&d, 2, 2);
    let fails = failures(&reports);
    assert!(fails.is_empty(), "{:?}", fails.first());
}

#[test]
fn a3_ya_suite_short_sequences() {
    let d = a3_data();
    let reports = verify_ya_relations(&d, 2, 3);
    let fails = failures(&reports);
    assert!(fails.is_empty(), "{:?}", fails.first());
}

#[test]
fn a3_crosscheck_r2() {
    let d = a3_data();
    let reports = cross_check_flagya(&d, 2, 2);
    let fails = failures(&reports);
    assert!(fails.is_empty(), "{:?}", fails.first());
}
