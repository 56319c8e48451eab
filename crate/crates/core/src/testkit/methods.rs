//! Template-based random method generator. Used by the search equivalence
//! suites, which need bodies with a controllable number of addressable
//! statements; independent of the grammar module's derivation sampler.

use crate::ast::{parse_method, statement_universe, MethodUnit};
use rand::seq::SliceRandom;
use rand::Rng;

#[derive(Debug, Clone)]
pub struct MethodGenConfig {
    /// Number of addressable statements (shells and nested elements).
    pub statements: usize,
    /// Chance that a generated slot becomes a control construct with one
    /// nested statement (consuming two slots).
    pub nesting: f64,
}

impl Default for MethodGenConfig {
    fn default() -> Self {
        MethodGenConfig { statements: 5, nesting: 0.25 }
    }
}

const CALLEES: &[&str] = &["log", "emit", "push", "store.put", "sink.write", "chan.send"];
const NAMES: &[&str] = &["x", "y", "n", "acc", "buf", "tmp", "row", "col"];
const WORDS: &[&str] = &["alpha", "beta", "gamma", "delta", "omega", "sigma"];

/// Generate a parseable method whose statement universe has exactly
/// `config.statements` entries.
pub fn random_method(rng: &mut impl Rng, config: &MethodGenConfig) -> MethodUnit {
    let mut remaining = config.statements;
    let mut lines: Vec<String> = Vec::new();
    let mut counter = 0usize;
    while remaining > 0 {
        if remaining >= 2 && rng.gen_bool(config.nesting) {
            let inner = simple_statement(rng, &mut counter);
            let cond_name = *NAMES.choose(rng).unwrap();
            match rng.gen_range(0..3u8) {
                0 => lines.push(format!("if ({cond_name} > {}) {{ {inner} }}", rng.gen_range(0..9))),
                1 => lines.push(format!("while ({cond_name} < {}) {{ {inner} }}", rng.gen_range(1..9))),
                _ => lines.push(format!("try {{ {inner} }} catch (Exception e) {{ }}")),
            }
            // try/catch with an empty catch still costs only the shell plus
            // the inner statement
            remaining -= 2;
        } else {
            lines.push(simple_statement(rng, &mut counter));
            remaining -= 1;
        }
    }
    let body = lines.join("\n    ");
    let src = format!("void work(int seedArg, Data payload) {{\n    {body}\n}}");
    let m = parse_method(&src).expect("generated method must parse");
    debug_assert_eq!(statement_universe(&m).len(), config.statements);
    m
}

fn simple_statement(rng: &mut impl Rng, counter: &mut usize) -> String {
    *counter += 1;
    let id = *counter;
    match rng.gen_range(0..4u8) {
        0 => {
            let callee = *CALLEES.choose(rng).unwrap();
            let word = *WORDS.choose(rng).unwrap();
            format!("{callee}(\"{word} {id}\");")
        }
        1 => {
            let name = *NAMES.choose(rng).unwrap();
            let callee = *CALLEES.choose(rng).unwrap();
            format!("{callee}({name}, {});", rng.gen_range(0..100))
        }
        2 => {
            let name = *NAMES.choose(rng).unwrap();
            format!("int v{id} = {name} + {};", rng.gen_range(0..100))
        }
        _ => {
            let name = *NAMES.choose(rng).unwrap();
            format!("{name} = {name} * {};", rng.gen_range(2..9))
        }
    }
}
