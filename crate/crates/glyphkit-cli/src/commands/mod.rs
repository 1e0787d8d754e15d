pub mod hyphenate;
pub mod lig;
pub mod raster;
pub mod reproduce;
