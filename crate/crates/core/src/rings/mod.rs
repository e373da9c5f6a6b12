//! Coefficient rings: the three supported families, their places,
//! fractional ideals, Picard groups, field elements, Riemann-Roch
//! counts and enumeration.

pub mod elements;
pub mod elliptic;
pub mod enumerate;
pub mod ideal;
pub mod pic;
pub mod place;
pub mod spec;

pub use elements::FieldElement;
pub use enumerate::{
    choose_representatives, coset_min_degree, ideal_elements_up_to_degree,
    ideal_space_dim, ideals_of_degree_in_class, riemann_roch_count, RepMode,
};
pub use ideal::{integral_ideals_of_degree, mobius, IdealRep};
pub use pic::{PicClass, PicGroup};
pub use place::{places_of_degree, places_up_to_degree, Place, PlaceKind};
pub use spec::{RingKind, RingSpec};
