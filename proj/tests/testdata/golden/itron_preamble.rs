use crate::kernel_cfg::*;
use itron::abi::*;
use itron::TaskRef::*;
