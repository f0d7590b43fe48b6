//! Operad term calculi with nominal and diversified insertion, their weak
//! categorial counterparts, and a coherence engine deciding equality of
//! canonical arrows through permutation graphs.

pub mod addresses;
pub mod arrows;
pub mod error;
pub mod perm;
pub mod polytopes;
pub mod syntax;
pub mod terms;
pub mod translate;

pub use addresses::{LexOrder, NWord, NominalArity};
pub use arrows::{arrow_eq, strictify, Arrow, AxiomFamily, Equation, StrictArrow};
pub use error::{Error, Result, TreePath};
pub use perm::{perm_eq, Bracket, PermArrow, PermGraph};
pub use polytopes::{STree, Skeleton, TreeInput};
pub use terms::{Flavor, Generator, GeneratorSignature, RawTerm, Signature, Term, TermNode};
pub use translate::{canonical_form, closure_oracle, term_eq, translate};
