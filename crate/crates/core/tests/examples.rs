//! Every example compiles as a module here and runs to completion.

macro_rules! example {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!("../examples/", $file));
            #[test]
            fn runs() {
                main();
            }
        }
    };
}

example!(acceptance_suite, "acceptance_suite.rs");
example!(circle_polars, "circle_polars.rs");
example!(cyclic_hulls, "cyclic_hulls.rs");
example!(divisible_chains, "divisible_chains.rs");
example!(division_lemma, "division_lemma.rs");
example!(exclusion_certificates, "exclusion_certificates.rs");
example!(family_verdicts, "family_verdicts.rs");
example!(grid_hulls, "grid_hulls.rs");
example!(pushforward, "pushforward.rs");
example!(real_line_hulls, "real_line_hulls.rs");
example!(ternary_truncations, "ternary_truncations.rs");
