#pragma once

//! Convenience header pulling in the whole library.

#include "character_table.hpp"
#include "cyclotomic.hpp"
#include "double_coset.hpp"
#include "errors.hpp"
#include "group_algebra.hpp"
#include "group_spec.hpp"
#include "hecke.hpp"
#include "perm_group.hpp"
#include "permutation.hpp"
#include "prym.hpp"
#include "rational.hpp"
#include "regression.hpp"
#include "report.hpp"
#include "subgroups.hpp"
