mod common;

use common::{endo, golden, module, quandle};
use qmq_core::builtin::builtin_link;
use qmq_core::poly::TwoVarPolynomial;
use qmq_core::quiver::PushPolicy;
use qmq_core::table::{polynomial_of, TableConfig};
use qmq_core::Execution;

fn check(name: &str, policy: PushPolicy) {
    let (qn, _) = name.rsplit_once('_').unwrap();
    let q = quandle(qn);
    let m = module(name);
    let f = [endo(qn, &q)];
    let mut rows = 0;
    for exec in [Execution::Sequential, Execution::Parallel] {
        let cfg = TableConfig {
            quandle: &q,
            module: &m,
            endomorphisms: &f,
            policy,
            exec,
        };
        for line in golden(name).lines().filter(|l| !l.starts_with('#')) {
            let cols: Vec<&str> = line.split('\t').collect();
            let d = builtin_link(cols[0]).unwrap();
            let mask: u64 = cols[1].parse().unwrap();
            let mirror = cols[2] == "1";
            let want: TwoVarPolynomial = cols[3].parse().unwrap();
            let got = polynomial_of(&cfg, &d.variant(mask, mirror)).unwrap();
            assert_eq!(got, want, "{name} {}", cols[0]);
            rows += 1;
        }
    }
    assert!(rows > 0);
}

#[test]
fn z3_table() {
    check("q5_z3", PushPolicy::RequireEndomorphism);
}

#[test]
fn z3_four_element_pair() {
    check("q4_l7n_z3", PushPolicy::RequireEndomorphism);
}

#[test]
fn z6_table() {
    check("q3_z6", PushPolicy::AnyMap);
}
