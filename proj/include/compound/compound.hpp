#pragma once

#include "compound/abacus.hpp"
#include "compound/basis.hpp"
#include "compound/bijections.hpp"
#include "compound/coefficients.hpp"
#include "compound/golden.hpp"
#include "compound/int_matrix.hpp"
#include "compound/memo.hpp"
#include "compound/numeric.hpp"
#include "compound/partition.hpp"
#include "compound/schur.hpp"
#include "compound/serialize.hpp"
#include "compound/symfunc.hpp"
#include "compound/transition.hpp"
#include "compound/verify.hpp"
