use zetaband_core::{EvalPolicy, ZeroTable};

pub fn zeros_table() -> ZeroTable {
    ZeroTable::load(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../data/zeros_1000.txt"
    ))
    .expect("committed zero table loads")
}

pub fn policy() -> EvalPolicy {
    EvalPolicy::default()
}
