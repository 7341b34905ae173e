mod scalars_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/scalars.rs"));
}

mod normal_forms_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/normal_forms.rs"));
}

mod tilde_ideal_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/tilde_ideal.rs"));
}

mod downup_ideal_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/downup_ideal.rs"));
}

mod ore_data_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/ore_data.rs"));
}

mod recurrence_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/recurrence.rs"));
}

mod classify_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/classify.rs"));
}

mod eval_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/eval.rs"));
}

mod normality_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/normality.rs"));
}

mod verify_suite_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_suite.rs"));
}

#[test]
fn scalars_example_runs() {
    scalars_example::run().expect("scalars example runs");
}

#[test]
fn normal_forms_example_runs() {
    normal_forms_example::run().expect("normal_forms example runs");
}

#[test]
fn tilde_ideal_example_runs() {
    tilde_ideal_example::run().expect("tilde_ideal example runs");
}

#[test]
fn downup_ideal_example_runs() {
    downup_ideal_example::run().expect("downup_ideal example runs");
}

#[test]
fn ore_data_example_runs() {
    ore_data_example::run().expect("ore_data example runs");
}

#[test]
fn recurrence_example_runs() {
    recurrence_example::run().expect("recurrence example runs");
}

#[test]
fn classify_example_runs() {
    classify_example::run().expect("classify example runs");
}

#[test]
fn eval_example_runs() {
    eval_example::run().expect("eval example runs");
}

#[test]
fn normality_example_runs() {
    normality_example::run().expect("normality example runs");
}

#[test]
fn verify_suite_example_runs() {
    verify_suite_example::run().expect("verify_suite example runs");
}
