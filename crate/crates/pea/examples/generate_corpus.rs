//! Write every corpus algebra to disk and read it back bit-exactly.

use pea::construct::standard_corpus;
use pea::io::{read_algebra, write_algebra};

fn main() {
    let dir = std::env::temp_dir().join("pea-corpus");
    std::fs::create_dir_all(&dir).unwrap();
    for (name, alg) in standard_corpus() {
        let path = dir.join(format!("{name}.json"));
        write_algebra(&alg, &path).unwrap();
        let back = read_algebra(&path).unwrap();
        assert_eq!(back.table(), alg.table());
        println!("{name}: {} elements -> {}", alg.size(), path.display());
    }
}
