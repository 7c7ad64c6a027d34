#pragma once

#include "hsp/catalog.hpp"
#include "hsp/characters.hpp"
#include "hsp/class_profile.hpp"
#include "hsp/coset.hpp"
#include "hsp/exact.hpp"
#include "hsp/lab.hpp"
#include "hsp/parallel.hpp"
#include "hsp/partition.hpp"
#include "hsp/perm.hpp"
#include "hsp/perm_group.hpp"
#include "hsp/qfs.hpp"
#include "hsp/sqrt_sum.hpp"
