pub mod artin;
pub mod brauer;
pub mod burnside;
pub mod character;
pub mod exact;
pub mod group;
pub mod lie;
mod json;
