//! QWEYL_SEED is read into the run configuration. Kept in its own binary because
//! it mutates the process environment.

use qweyl::config::{RunConfig, SEED_VAR};

#[test]
fn seed_is_taken_from_the_environment() {
    std::env::set_var(SEED_VAR, "7");
    let cfg = RunConfig::default().with_env().unwrap();
    assert_eq!(cfg.seed, 7);
    assert_eq!(cfg.search_options().seed, 7);
    std::env::remove_var(SEED_VAR);
    assert_eq!(RunConfig::default().with_env().unwrap().seed, RunConfig::default().seed);
}
