#pragma once

#include <cyclodet/combinatorics.hpp>
#include <cyclodet/cyclotomic.hpp>
#include <cyclodet/exact_linalg.hpp>
#include <cyclodet/exact_numbers.hpp>
#include <cyclodet/identities.hpp>
#include <cyclodet/permutation.hpp>
#include <cyclodet/poly_ring.hpp>
