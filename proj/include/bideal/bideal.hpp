#ifndef BIDEAL_BIDEAL_HPP
#define BIDEAL_BIDEAL_HPP

#include "errors.hpp"
#include "rational.hpp"
#include "matrix.hpp"
#include "multipoly.hpp"
#include "arrangement.hpp"
#include "lattice.hpp"
#include "structure.hpp"
#include "bernstein.hpp"
#include "document.hpp"
#include "report.hpp"

#endif  // BIDEAL_BIDEAL_HPP
