#![no_main]

use bipartite_ramsey::format::{parse_witness, HostSpec};
use bipartite_ramsey::verify_witness;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let Ok(doc) = parse_witness(text) else {
        return;
    };
    let small = match doc.host {
        Some(HostSpec::SetGraph { n, .. }) => n <= 12,
        Some(HostSpec::Complete { n, k }) => n <= 64 && k <= 64,
        None => false,
    };
    if !small {
        return;
    }
    if let Ok(host) = doc.host.unwrap().build() {
        if let Ok(w) = doc.resolve(&host) {
            let _ = verify_witness(&host, None, &w);
        }
    }
});
