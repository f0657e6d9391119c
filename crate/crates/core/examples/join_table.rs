use mixoptic_core::capability::OpticKind;
use mixoptic_core::composition::{join_kind, JoinResult};

fn main() {
    for a in OpticKind::ALL {
        let row: Vec<String> = OpticKind::ALL
            .iter()
            .map(|b| match join_kind(a, *b) {
                JoinResult::Kind(k) => format!("{k}"),
                JoinResult::Fallback(k) => format!("~{k}"),
                JoinResult::Incompatible => "-".into(),
            })
            .collect();
        println!("{:>18}: {}", a.name(), row.join(" | "));
    }
}
