//! Exact verification of cyclic sieving phenomena on Catalan families.
//!
//! The crate enumerates noncrossing (1,2)-configurations, noncrossing perfect
//! matchings and polygon triangulations, rotates them, and checks that the
//! number of objects fixed by each rotation equals the MacMahon q-Catalan
//! polynomial evaluated at the matching root of unity. Evaluation is exact:
//! roots of unity are handled by reduction modulo cyclotomic polynomials.
//!
//! ```
//! use catalan_csp::csp::{verify_csp, FamilyDescriptor};
//!
//! let report = verify_csp(&FamilyDescriptor::configurations(5)?)?;
//! assert!(report.csp_holds);
//! let fixed: Vec<u64> = report.rows.iter().map(|r| r.fixed).collect();
//! assert_eq!(fixed, [42, 2, 10, 2]);
//! # Ok::<(), catalan_csp::Error>(())
//! ```

pub mod actions;
pub mod cli;
pub mod closedform;
pub mod csp;
mod error;
pub mod objects;
pub mod qpoly;

pub use error::{Error, Result};

// The guide's code blocks are compiled and run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/q-analogues.md")]
    mod q_analogues {}
    #[doc = include_str!("../../../book/src/roots-of-unity.md")]
    mod roots_of_unity {}
    #[doc = include_str!("../../../book/src/configurations.md")]
    mod configurations {}
    #[doc = include_str!("../../../book/src/rotations.md")]
    mod rotations {}
    #[doc = include_str!("../../../book/src/closed-forms.md")]
    mod closed_forms {}
    #[doc = include_str!("../../../book/src/verifier.md")]
    mod verifier {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
