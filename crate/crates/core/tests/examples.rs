mod hilbert_symbols_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/hilbert_symbols.rs"));
}

#[test]
fn hilbert_symbols_example_runs() {
    hilbert_symbols_example::run_example().expect("hilbert symbols example should run");
}

mod quadratic_class_groups_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quadratic_class_groups.rs"));
}

#[test]
fn quadratic_class_groups_example_runs() {
    quadratic_class_groups_example::run_example().expect("quadratic class groups example should run");
}

mod steinitz_cancellation_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/steinitz_cancellation.rs"));
}

#[test]
fn steinitz_cancellation_example_runs() {
    steinitz_cancellation_example::run_example().expect("steinitz cancellation example should run");
}

mod quaternion_ramification_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quaternion_ramification.rs"));
}

#[test]
fn quaternion_ramification_example_runs() {
    quaternion_ramification_example::run_example().expect("quaternion ramification example should run");
}

mod maximal_orders_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/maximal_orders.rs"));
}

#[test]
fn maximal_orders_example_runs() {
    maximal_orders_example::run_example().expect("maximal orders example should run");
}

mod short_vectors_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/short_vectors.rs"));
}

#[test]
fn short_vectors_example_runs() {
    short_vectors_example::run_example().expect("short vectors example should run");
}

mod class_set_enumeration_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/class_set_enumeration.rs"));
}

#[test]
fn class_set_enumeration_example_runs() {
    class_set_enumeration_example::run_example().expect("class set enumeration example should run");
}

mod stable_classes_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/stable_classes.rs"));
}

#[test]
fn stable_classes_example_runs() {
    stable_classes_example::run_example().expect("stable classes example should run");
}

mod swan_class_groups_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/swan_class_groups.rs"));
}

#[test]
fn swan_class_groups_example_runs() {
    swan_class_groups_example::run_example().expect("swan class groups example should run");
}

mod matrix_reduced_norm_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/matrix_reduced_norm.rs"));
}

#[test]
fn matrix_reduced_norm_example_runs() {
    matrix_reduced_norm_example::run_example().expect("matrix reduced norm example should run");
}

mod cancellation_table_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cancellation_table.rs"));
}

#[test]
fn cancellation_table_example_runs() {
    cancellation_table_example::run_example().expect("cancellation table example should run");
}
