#pragma once

#include "jordan/exact/scalar.hpp"
#include "jordan/exact/linalg.hpp"
#include "jordan/exact/composition.hpp"
#include "jordan/algebra/algebra.hpp"
#include "jordan/algebra/validate.hpp"
#include "jordan/algebra/constructions.hpp"
#include "jordan/annihilators/annihilators.hpp"
#include "jordan/annihilators/deciders.hpp"
#include "jordan/annihilators/dispatch.hpp"
#include "jordan/annihilators/verify.hpp"
#include "jordan/radicals/radicals.hpp"
#include "jordan/radicals/lattice.hpp"
#include "jordan/corpus/algebras.hpp"
#include "jordan/corpus/sweeps.hpp"
#include "jordan/corpus/claims.hpp"
#include "jordan/io/json.hpp"
