// Everything in one include.
#ifndef DIII_DIII_HPP
#define DIII_DIII_HPP

#include "diii/checked.hpp"
#include "diii/clan.hpp"
#include "diii/delannoy.hpp"
#include "diii/enumeration.hpp"
#include "diii/exact_linalg.hpp"
#include "diii/flag.hpp"
#include "diii/io.hpp"
#include "diii/parallel.hpp"
#include "diii/qsqrt2.hpp"
#include "diii/rooks.hpp"
#include "diii/sects.hpp"
#include "diii/verify.hpp"
#include "diii/weak_order.hpp"

#endif  // DIII_DIII_HPP
