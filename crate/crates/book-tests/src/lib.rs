//! Doc-tests for the guide. Each chapter of `book/src` is included as
//! documentation so `cargo test` compiles and runs its Rust snippets; the
//! README is checked the same way.

macro_rules! chapter {
    ($name:ident, $file:literal) => {
        #[cfg(doctest)]
        #[doc = include_str!(concat!("../../../book/src/", $file))]
        pub struct $name;
    };
}

chapter!(Introduction, "introduction.md");
chapter!(Model, "model.md");
chapter!(Detectors, "detectors.md");
chapter!(Drift, "drift.md");
chapter!(Theory, "theory.md");
chapter!(MonteCarlo, "monte-carlo.md");
chapter!(Switching, "switching.md");
chapter!(Cli, "cli.md");

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub struct Readme;
