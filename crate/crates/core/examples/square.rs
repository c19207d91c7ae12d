//! End-to-end tour on a small mesh: build the filled square split along a
//! diagonal, put a two-parameter function on it, construct a nearby Morse
//! function with its gradient field, and report what the construction found.
//!
//! Run with: `cargo run -p mdm-core --example square`

use mdm_core::{
    generate_mdm, max_extension, pareto_set, verify_mdm, IndexingMap, Ring, SimplicialComplex,
};

fn main() {
    // Two triangles glued along the diagonal AD; all faces of an inserted
    // simplex are created on demand, faces before cofaces.
    let mut k = SimplicialComplex::new();
    k.insert_simplex(&[0, 2, 3]).unwrap();
    k.insert_simplex(&[0, 1, 3]).unwrap();

    // A two-parameter function on the vertices A=0, B=1, C=2, D=3, extended
    // to every simplex by componentwise maxima over its vertices.
    #[rustfmt::skip]
    let vertex_values = [
        1.0, 2.0, // A
        0.0, 0.0, // B
        0.0, 0.0, // C
        2.0, 1.0, // D
    ];
    let f = max_extension(&k, 2, &vertex_values).unwrap();

    // Construct a Morse function g with |g - f| <= 0.5 in every coordinate,
    // together with a compatible gradient vector field.
    let index = IndexingMap::insertion_order(&k);
    let (g, field, _trace) = generate_mdm(&k, &f, &index, 0.5).unwrap();
    assert!(verify_mdm(&k, &g).is_mdm());

    println!("critical cells by dimension: {:?}", field.morse_counts(&k));
    for s in field.critical_simplices().iter() {
        println!(
            "  critical cell {:?} at g = {:?}",
            k.vertices_of(s),
            g.realized(s)
        );
    }

    // Where does no level direction descend? Here: everywhere, because the
    // two parameters pull towards opposite corners of the square.
    let pareto = pareto_set(&k, &f, Ring::Z);
    println!(
        "Pareto set: {} of {} cells in {} component(s)",
        pareto.simplices.len(),
        k.len(),
        pareto.components.len()
    );
}
