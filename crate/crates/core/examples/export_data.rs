//! Writes the bundled complexes used by the command-line examples to `data/`.
//!
//! Run with `cargo run -p facering --example export_data [-- <dir>]`.

use std::fs;
use std::path::PathBuf;

use facering::catalog;
use facering::io::{to_json, to_text};
use facering::simplicial::Face;

fn main() -> std::io::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("data"));
    fs::create_dir_all(&dir)?;
    let octa = catalog::octahedron();
    let hemisphere = octa.star(&Face::vertex(0)).expect("vertex 1 exists").renamed("octa_upper");
    let lower = octa.deletion(&Face::vertex(0)).renamed("octa_lower");
    let json = [
        ("icosahedron.json", catalog::icosahedron()),
        ("octa.json", octa.clone()),
        ("torus.json", catalog::torus7()),
        ("cone_cycle4.json", catalog::cone_over_cycle4()),
        ("cone_octahedron.json", catalog::cone_over_octahedron()),
        ("octa_upper.json", hemisphere.compacted()),
        ("octa_lower.json", lower.compacted()),
    ];
    for (name, c) in json {
        fs::write(dir.join(name), to_json(&c) + "\n")?;
    }
    fs::write(dir.join("tetra.txt"), to_text(&catalog::simplex_boundary(3)))?;
    fs::write(dir.join("wedge.txt"), to_text(&catalog::wedge_of_spheres()))?;
    println!("wrote {}", dir.display());
    Ok(())
}
