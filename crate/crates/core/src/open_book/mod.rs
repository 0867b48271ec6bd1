//! Abstract open books on genus-one pages, checked through their action on
//! `H_1` of the page.

mod book;
mod family;
mod format;
mod page;
mod word;

pub use book::{
    braid_pairs, braid_relation_check, commute, destabilization_consistent, destabilize_any, euler_characteristic,
    h1_action, hopf_destabilize, hopf_stabilize, kernel_inclusion, lantern_rewrite, slide, transvection, word_action,
    AbstractOpenBook, Destabilization, LanternSite, Region,
};
pub use family::{
    boundary_generator, braid_move, braid_site, family_book, family_boundary_count, find_conjugator,
    meridian_generator, torsion_block_products, torus_bundle_monodromy, without_surgery_twist, BraidMove,
    MonodromyReport, Sl2Matrix, BASE_PAIRS, BLOCK_REPEATS,
};
pub use format::{parse_book, serialize_book};
pub use page::{Arc, Curve, CurveKind, PageSurface};
pub use word::{Sign, Twist, TwistWord};
