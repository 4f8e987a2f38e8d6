//! Provenance check of the bundled reference data against its checksum
//! manifest.

use sha2::{Digest, Sha256};

#[test]
fn data_files_match_manifest() {
    let root = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let manifest = std::fs::read_to_string(format!("{root}/SHA256SUMS")).unwrap();
    let mut seen = 0;
    for line in manifest.lines() {
        let (want, name) = line.split_once("  ").unwrap();
        let bytes = std::fs::read(format!("{root}/{name}")).unwrap();
        let got = format!("{:x}", Sha256::digest(&bytes));
        assert_eq!(got, want, "{name} does not match its recorded checksum");
        seen += 1;
    }
    assert_eq!(seen, 4);
}

#[test]
fn embedded_data_equals_on_disk_data() {
    let root = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    for (name, embedded) in [
        ("table1.txt", include_str!("../data/table1.txt")),
        ("table2.txt", include_str!("../data/table2.txt")),
        ("golden_ops.txt", include_str!("../data/golden_ops.txt")),
        ("golden_zetas.txt", include_str!("../data/golden_zetas.txt")),
    ] {
        let on_disk = std::fs::read_to_string(format!("{root}/{name}")).unwrap();
        assert_eq!(embedded, on_disk, "{name}");
    }
}
