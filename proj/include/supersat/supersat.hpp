#ifndef SUPERSAT_SUPERSAT_HPP
#define SUPERSAT_SUPERSAT_HPP

#include "supersat/core.hpp"
#include "supersat/counting.hpp"
#include "supersat/oracle.hpp"
#include "supersat/scd.hpp"
#include "supersat/theorem.hpp"
#include "supersat/verify.hpp"

#endif // SUPERSAT_SUPERSAT_HPP
