use lss_core::graph::graphs_up_to_iso;
use lss_core::harness::{self, ScanFilter, ScanOptions, CSV_HEADER};
use lss_core::Budget;

fn opts(jobs: usize) -> ScanOptions {
    ScanOptions { budget: Budget::default(), jobs, timing: false, filter: ScanFilter::default() }
}

fn corpus() -> String {
    let graphs: Vec<_> = (1..=5).flat_map(|n| graphs_up_to_iso(n, false)).collect();
    harness::corpus_text(&graphs)
}

#[test]
fn serial_scans_are_byte_identical() {
    let text = corpus();
    let a = harness::scan_text(&text, &opts(1)).to_csv();
    let b = harness::scan_text(&text, &opts(1)).to_csv();
    assert_eq!(a, b);
    assert_eq!(a.lines().next(), Some(CSV_HEADER));
}

#[test]
fn parallel_equals_serial() {
    let text = corpus();
    let serial = harness::scan_text(&text, &opts(1));
    let parallel = harness::scan_text(&text, &opts(4));
    let mut a = serial.rows.clone();
    let mut b = parallel.rows.clone();
    a.sort_by(|x, y| x.id.cmp(&y.id));
    b.sort_by(|x, y| x.id.cmp(&y.id));
    assert_eq!(a, b);
    assert_eq!(serial.summary, parallel.summary);
}

#[test]
fn golden_rows() {
    let rep = harness::scan_text("A_\nCj\n# the K4\nC~\nnot graph6!\n", &opts(1));
    let expected = format!(
        "{CSV_HEADER}\n\
         A_,2,1,true,1,1,1,1,exact,0,true,true,true,0\n\
         Cj,4,4,false,3,2,4,3,exact,1,true,,true,0\n\
         C~,4,6,false,3,3,5,5,exact,0,true,,true,0\n\
         not graph6!,,,,,,,,error,,,,,0\n"
    );
    assert_eq!(rep.to_csv(), expected);
    assert_eq!(rep.summary.max_gap, Some(1));
    assert!(rep.summary_text().contains("0 pmd > alpha findings"));
}

#[test]
fn scan_corpus_reads_files_and_reports_io_errors() {
    let dir = std::env::temp_dir().join(format!("lss-scan-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.g6");
    std::fs::write(&path, "Bw\n").unwrap();
    let rep = harness::scan_corpus(&path, &opts(1)).unwrap();
    assert_eq!(rep.rows[0].pmd, Some(3));
    assert!(harness::scan_corpus(&dir.join("missing.g6"), &opts(1)).is_err());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_rows() {
    let rep = harness::scan_text("A_\n", &opts(1));
    let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
    assert_eq!(v[0]["pmd"], 1);
    assert_eq!(v[0]["status"], "exact");
}
