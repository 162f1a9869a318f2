//! Writes the three-dimensional reflexive polytopes in KS format to the path
//! given as the only argument, or to standard output.

use std::io::Write;

fn main() {
    let out = std::env::args().nth(1);
    let start = std::time::Instant::now();
    let entries = rk3_census::enumerate(|nodes, found| {
        eprintln!("visited {nodes}, reflexive {found}, {:.0?}", start.elapsed());
    });
    eprintln!("{} classes in {:.1?}", entries.len(), start.elapsed());
    let text = rk3_census::to_ks(&entries);
    match out {
        Some(path) => std::fs::write(&path, text).unwrap_or_else(|e| {
            eprintln!("cannot write {path}: {e}");
            std::process::exit(2);
        }),
        None => std::io::stdout().write_all(text.as_bytes()).expect("stdout"),
    }
}
