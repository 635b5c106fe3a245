pub mod bijections;
pub mod catalog;
pub mod enumerate;
pub mod objects;
pub mod report;
pub mod series;
pub mod verify;
