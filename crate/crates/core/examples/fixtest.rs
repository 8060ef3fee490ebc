//! Scratch driver for the fixture suites (development aid).

use toda_schubert::verify::{run_all, CheckId, Config};

fn main() {
    let cfg = Config::default();
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);
    let check: CheckId = std::env::args()
        .nth(2)
        .map(|s| s.parse().unwrap())
        .unwrap_or(CheckId::Fixtures);
    for r in run_all(n, Some(&[check]), &cfg) {
        println!("n={} {} {:?} {}ms", n, r.case, r.status, r.millis);
        if let Some(w) = &r.witness {
            println!("--- witness:\n{w}");
        }
    }
}
