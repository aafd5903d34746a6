//! Weights tagged with the coordinate frame they are expressed in.

use alloc::string::String;
use alloc::vec::Vec;

use crate::qfmt;
use crate::{rat, Rat};

/// Coordinate frame of a [`Weight`].
///
/// `Ambient` vectors live in R^8 (restricted to the 7-dimensional root
/// span); the other three frames are coefficient vectors of length 7.
/// `AtlasK` coordinates are the integer labels used by external software
/// for K-types; numerically they coincide with `Zeta` coefficients, but the
/// tag is kept distinct so provenance stays visible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Frame {
    Ambient,
    Zeta,
    Varpi,
    AtlasK,
}

impl Frame {
    pub fn dim(self) -> usize {
        match self {
            Frame::Ambient => 8,
            _ => 7,
        }
    }
}

/// An exact weight vector in one of the four frames.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub coords: Vec<Rat>,
    pub frame: Frame,
}

impl Weight {
    pub fn new(coords: Vec<Rat>, frame: Frame) -> Self {
        assert_eq!(coords.len(), frame.dim(), "coordinate count does not match frame");
        Self { coords, frame }
    }

    pub fn from_ints(coords: &[i64], frame: Frame) -> Self {
        Self::new(coords.iter().map(|&c| rat(c)).collect(), frame)
    }

    pub fn zero(frame: Frame) -> Self {
        Self::new(alloc::vec![Rat::from_integer(0.into()); frame.dim()], frame)
    }

    pub fn is_zero(&self) -> bool {
        use num_traits::Zero;
        self.coords.iter().all(Rat::is_zero)
    }

    /// Coordinates as canonical `"p/q"` strings.
    pub fn render(&self) -> Vec<String> {
        self.coords.iter().map(qfmt::render).collect()
    }

    /// Integer coordinates, if every entry is an integer.
    pub fn as_ints(&self) -> Option<Vec<i64>> {
        use num_traits::{One, ToPrimitive};
        self.coords
            .iter()
            .map(|c| if c.denom().is_one() { c.numer().to_i64() } else { None })
            .collect()
    }
}

impl core::fmt::Display for Weight {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", qfmt::render(c))?;
        }
        write!(f, "]")
    }
}
