#pragma once

#include "rheight/constructions.hpp"
#include "rheight/enumerate.hpp"
#include "rheight/errors.hpp"
#include "rheight/green.hpp"
#include "rheight/ideals.hpp"
#include "rheight/invariants.hpp"
#include "rheight/rewriting.hpp"
#include "rheight/search.hpp"
#include "rheight/semigroup.hpp"
#include "rheight/verify.hpp"
