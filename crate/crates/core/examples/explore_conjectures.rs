//! Writes a small family of grids and triangulations to a scratch directory
//! and sweeps them through the CLI `explore` subcommand.

use std::fs;

use cutnorm::make_named;

fn main() {
    let dir = std::env::temp_dir().join("cutnorm-explore");
    fs::create_dir_all(&dir).unwrap();
    let family: [(&str, &[usize]); 6] = [
        ("grid", &[2, 3]),
        ("grid", &[3, 3]),
        ("W", &[6]),
        ("octahedron", &[]),
        ("prism", &[]),
        ("K", &[5]),
    ];
    for (name, params) in family {
        let g = make_named(name, params).unwrap();
        let label: Vec<String> = params.iter().map(|p| p.to_string()).collect();
        let file = dir.join(format!("{name}{}.txt", label.join("x")));
        fs::write(&file, g.to_text()).unwrap();
    }
    let pattern = format!("{}/*.txt", dir.display());
    let code = cutnorm::cli::run(["cutnorm", "explore", pattern.as_str(), "--max-degree", "3"]);
    println!("explore exited with {code}");
}
