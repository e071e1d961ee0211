mod common;

use crcodes::cr::verify_cr;
use crcodes::search::{search_exact, SearchStatus, SearchTarget};
use crcodes::{fixtures, Code, FieldOrder, Graph, DEFAULT_BUDGET};
use itertools::Itertools;

#[test]
fn spectra_match_dense_eigensolver() {
    let mut graphs = vec![Graph::hamming(5, FieldOrder::GF3, DEFAULT_BUDGET).unwrap()];
    for name in ["cr21_4.H", "golay11.H", "srg64_27.H", "srg64_28_a.H", "srg81_20.H", "cr10_8.H"] {
        graphs.push(Graph::syndrome(&fixtures::matrix(name).unwrap()));
    }
    graphs.push(graphs[1].complement());
    for g in &graphs {
        common::check_spectrum_dense(g).unwrap();
    }
}

#[test]
fn exact_search_agrees_with_brute_force() {
    let checked = common::exact_vs_naive_small(8, 6).unwrap();
    assert!(checked >= 10, "only {checked} targets");
}

#[test]
fn tiny_codes_in_eighty_one_vertices() {
    // every {b;c} code of size ≤ 4 in the 81-vertex fixtures
    let mut checked = 0;
    for name in fixtures::names().filter(|n| n.ends_with(".H")) {
        let g = Graph::syndrome(&fixtures::matrix(name).unwrap());
        if g.order() == 81 {
            checked += tiny_codes(&g, name);
        }
    }
    assert!(checked > 0);
}

fn tiny_codes(g: &Graph, name: &str) -> usize {
    let targets = common::two_cell_targets(g, 4);
    let count = targets.len();
    for t in targets {
        let size = t.cell_sizes.as_ref().unwrap()[0] as usize;
        let brute = (1..81u32).combinations(size - 1).any(|rest| {
            let mut words = vec![0];
            words.extend(rest);
            let code = Code::new(words).unwrap();
            verify_cr(g, &code).unwrap().is_some_and(|r| r.quotient == t.quotient)
        });
        let found = matches!(search_exact(g, &t, 10_000_000).unwrap().status, SearchStatus::Found(_));
        assert_eq!(found, brute, "{name}: {}", t.quotient);
    }
    count
}

#[test]
fn cell_sizes_match_product_formula() {
    let g = Graph::syndrome(&fixtures::matrix("cr21_4.H").unwrap());
    let r = verify_cr(&g, &fixtures::code("cr21_4.C").unwrap()).unwrap().unwrap();
    assert!(common::tridiagonal_cells_integral(&r.array, 81));
    assert_eq!(r.cell_sizes, vec![6, 63, 12]);
    let t = SearchTarget::from_array(&r.array, &g).unwrap();
    assert_eq!(t.cell_sizes.as_deref(), Some(&r.cell_sizes[..]));
}
