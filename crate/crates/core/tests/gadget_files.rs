use trilist_core::gadgets::{ld_gadget, nae_graph, setcover_graph, weighted_cost};
use trilist_core::io::{
    read_gadget, read_nae, read_set_cover, write_edgelist, write_nae, write_set_cover,
    write_sidecar,
};
use trilist_core::oracle::{min_cost_exhaustive, NaeFormula, Objective, SetCoverInstance};

fn round_trip(g: &trilist_core::gadgets::LabeledGadget) -> trilist_core::gadgets::LabeledGadget {
    let mut edges = Vec::new();
    let mut side = Vec::new();
    write_edgelist(g.graph(), &mut edges).unwrap();
    write_sidecar(g, &mut side).unwrap();
    read_gadget(edges.as_slice(), side.as_slice()).unwrap()
}

#[test]
fn nae_formula_and_gadget_survive_files() {
    let f = NaeFormula::new(4, vec![[1, 2, 3], [2, 3, 4]]).unwrap();
    let mut buf = Vec::new();
    write_nae(&f, &mut buf).unwrap();
    let back = read_nae(buf.as_slice()).unwrap();
    assert_eq!(back, f);
    let gadget = nae_graph(&back);
    assert_eq!(round_trip(&gadget.gadget), gadget.gadget);
    assert_eq!(gadget.threshold, 4);
}

#[test]
fn set_cover_with_empty_set_survives_files() {
    let inst = SetCoverInstance::new(2, vec![vec![1, 2], vec![], vec![2]], 1).unwrap();
    let mut buf = Vec::new();
    write_set_cover(&inst, &mut buf).unwrap();
    assert_eq!(String::from_utf8(buf.clone()).unwrap(), "2 1\n1 2\n-\n2\n");
    let back = read_set_cover(buf.as_slice()).unwrap();
    assert_eq!(back, inst);
    let sc = setcover_graph(&back).unwrap();
    let again = round_trip(&sc.gadget);
    assert_eq!(again, sc.gadget);
}

#[test]
fn ld_gadget_keeps_its_optimum_after_round_trip() {
    let ld = ld_gadget(2);
    let back = round_trip(&ld.gadget);
    let (best, _) = min_cost_exhaustive(back.graph(), Objective::Pp, 24).unwrap();
    assert_eq!(best, 27);
    assert_eq!(
        weighted_cost(&back.weighted, &ld.reference_order()).unwrap(),
        27
    );
}

#[test]
fn worked_cover_order_meets_the_bound() {
    let inst = SetCoverInstance::new(1, vec![vec![1]], 1).unwrap();
    let sc = setcover_graph(&inst).unwrap();
    let order = sc.cover_order(&[0], 1);
    assert_eq!(weighted_cost(&sc.gadget.weighted, &order).unwrap(), 105);
    assert_eq!(sc.bound, 105);
}

#[test]
fn malformed_instances_are_rejected() {
    assert!(read_nae("3 2\n1 2 3\n".as_bytes()).is_err());
    assert!(read_nae("3 1\n1 1 2\n".as_bytes()).is_err());
    assert!(read_nae("3 1\n1 2 9\n".as_bytes()).is_err());
    assert!(read_set_cover("2 1\n1 3\n".as_bytes()).is_err());
    assert!(read_set_cover("".as_bytes()).is_err());
}
