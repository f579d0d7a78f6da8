#pragma once

#include "ecc/charpoly.hpp"
#include "ecc/families.hpp"
#include "ecc/graph.hpp"
#include "ecc/io.hpp"
#include "ecc/matrix.hpp"
#include "ecc/numeric.hpp"
#include "ecc/report.hpp"
#include "ecc/spectrum.hpp"
#include "ecc/sym_matrix.hpp"
#include "ecc/theorems.hpp"
